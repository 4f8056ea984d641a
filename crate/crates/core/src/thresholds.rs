//! Closed-form threshold quantities for rainbow k-connectivity of `G(m, n, p)`.
//!
//! All logarithms are natural. Quantities that overflow `f64` at realistic
//! parameters (the `2^{10d}` constants, the union-bound failure estimate) are
//! carried in log space.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};

/// Default half-width of the "indeterminate" band of [`diameter_criterion`].
pub const DEFAULT_DEAD_BAND: f64 = 1e-9;

/// Relative slack allowed when testing `lhs >= rhs` so that exact boundary
/// cases survive rounding.
const BOUNDARY_SLACK: f64 = 1e-12;

fn check_sizes(m: usize, n: usize) -> Result<()> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidArgument(format!("threshold formulas need m, n >= 2 (got {m}, {n})")));
    }
    Ok(())
}

fn check_d(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("d must be at least 2 (got {d})")));
    }
    Ok(())
}

/// Threshold for odd `d`: `ln(mn)^{1/d} / (m^{(d-1)/(2d)} n^{(d-1)/(2d)})`.
pub fn p1(m: usize, n: usize, d: usize) -> Result<f64> {
    check_sizes(m, n)?;
    check_d(d)?;
    if d % 2 == 0 {
        return Err(Error::ParityMismatch { d, what: "p1 (odd d)" });
    }
    let (m, n, d) = (m as f64, n as f64, d as f64);
    let ln_mn = m.ln() + n.ln();
    Ok(ln_mn.powf(1.0 / d) / (m.powf((d - 1.0) / (2.0 * d)) * n.powf((d - 1.0) / (2.0 * d))))
}

/// Threshold for even `d`: `ln(n)^{1/d} / (m^{1/2} n^{(d-2)/(2d)})`.
pub fn p2(m: usize, n: usize, d: usize) -> Result<f64> {
    check_sizes(m, n)?;
    check_d(d)?;
    if d % 2 == 1 {
        return Err(Error::ParityMismatch { d, what: "p2 (even d)" });
    }
    let (m, n, d) = (m as f64, n as f64, d as f64);
    Ok(n.ln().powf(1.0 / d) / (m.sqrt() * n.powf((d - 2.0) / (2.0 * d))))
}

/// `p1` for odd `d`, `p2` for even `d`.
pub fn threshold(m: usize, n: usize, d: usize) -> Result<f64> {
    check_d(d)?;
    if d % 2 == 1 {
        p1(m, n, d)
    } else {
        p2(m, n, d)
    }
}

/// `c2 · (2 ln n)^{1/d} / (m^{1/2} n^{(d-2)/(2d)})` with `c2 = 1/(2 ln 2)^{1/d}`,
/// the lower-bound form used for even `d`. It coincides with [`p2`] only if
/// the logarithm in `p2` is read in base 2.
pub fn p2_lower_form(m: usize, n: usize, d: usize) -> Result<f64> {
    let base = p2(m, n, d)?;
    let (nf, df) = (n as f64, d as f64);
    let c2 = 1.0 / (2.0 * std::f64::consts::LN_2).powf(1.0 / df);
    Ok(base * c2 * (2.0 * nf.ln()).powf(1.0 / df) / nf.ln().powf(1.0 / df))
}

/// Edge probability at which the diameter criterion changes sign:
/// `p1` for odd `d`, `(2 ln n)^{1/d} / (m^{1/2} n^{(d-2)/(2d)})` for even `d`.
pub fn diameter_threshold(m: usize, n: usize, d: usize) -> Result<f64> {
    check_d(d)?;
    if d % 2 == 1 {
        p1(m, n, d)
    } else {
        Ok(p2(m, n, d)? * 2f64.powf(1.0 / d as f64))
    }
}

/// Model parameters plus the derived constants of the upper-bound argument.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegimeParams {
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub c0: f64,
    /// Only used for even `d`.
    pub epsilon: f64,
}

/// A probability that may be astronomically large before clamping.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ScaledProbability {
    pub ln_value: f64,
    /// `exp(ln_value)`; may exceed 1 or be infinite.
    pub value: f64,
    /// Set when the value exceeds 1, so it has no empirical meaning.
    pub symbolic_only: bool,
}

impl ScaledProbability {
    fn from_ln(ln_value: f64) -> Self {
        ScaledProbability { ln_value, value: ln_value.exp(), symbolic_only: ln_value > 0.0 }
    }
}

impl RegimeParams {
    pub fn new(m: usize, n: usize, d: usize, k: usize, c0: f64, epsilon: f64) -> Result<Self> {
        check_sizes(m, n)?;
        check_d(d)?;
        if k == 0 {
            return Err(Error::InvalidArgument("k must be at least 1".into()));
        }
        if !(c0 >= 1.0 && c0.is_finite()) {
            return Err(Error::InvalidArgument(format!("c0 must be >= 1 (got {c0})")));
        }
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::InvalidArgument(format!("epsilon must lie in (0, 1) (got {epsilon})")));
        }
        Ok(RegimeParams { m, n, d, k, c0, epsilon })
    }

    /// `k = max(1, floor(c0 · ln n))`.
    pub fn with_log_k(m: usize, n: usize, d: usize, c0: f64, epsilon: f64) -> Result<Self> {
        let k = ((c0 * (n as f64).ln()).floor() as usize).max(1);
        Self::new(m, n, d, k, c0, epsilon)
    }

    /// `ln C1` where `C1 = 2^{10d} c0`.
    pub fn ln_big_c1(&self) -> f64 {
        10.0 * self.d as f64 * std::f64::consts::LN_2 + self.c0.ln()
    }

    /// `ln C2` where `C2 = 2^{10d} c0 / epsilon`.
    pub fn ln_big_c2(&self) -> f64 {
        self.ln_big_c1() - self.epsilon.ln()
    }

    pub fn big_c1(&self) -> f64 {
        self.ln_big_c1().exp()
    }

    pub fn big_c2(&self) -> f64 {
        self.ln_big_c2().exp()
    }

    /// `(ln 2)^{1/d} / 2`.
    pub fn small_c1(&self) -> f64 {
        std::f64::consts::LN_2.powf(1.0 / self.d as f64) / 2.0
    }

    /// `1 / (2 ln 2)^{1/d}`.
    pub fn small_c2(&self) -> f64 {
        1.0 / (2.0 * std::f64::consts::LN_2).powf(1.0 / self.d as f64)
    }

    pub fn threshold(&self) -> Result<f64> {
        threshold(self.m, self.n, self.d)
    }

    /// `C1 · p1` (odd `d`) or `C2 · p2` (even `d`), where the disjoint-path
    /// count is guaranteed.
    pub fn upper_probability(&self) -> Result<ScaledProbability> {
        let scale = if self.d % 2 == 1 { self.ln_big_c1() } else { self.ln_big_c2() };
        Ok(ScaledProbability::from_ln(scale + self.threshold()?.ln()))
    }

    /// `c1 · p1` (odd `d`) or `p2` (even `d`), below which the diameter already
    /// rules out `rc_k <= d + 1`.
    pub fn lower_probability(&self) -> Result<f64> {
        if self.d % 2 == 1 {
            Ok(self.small_c1() * p1(self.m, self.n, self.d)?)
        } else {
            p2(self.m, self.n, self.d)
        }
    }
}

/// One inequality of a regime check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Inequality {
    pub name: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs - rhs`.
    pub slack: f64,
    pub holds: bool,
}

impl Inequality {
    fn new(name: &'static str, lhs: f64, rhs: f64) -> Self {
        let holds = lhs >= rhs - BOUNDARY_SLACK * rhs.abs().max(lhs.abs());
        Inequality { name, lhs, rhs, slack: lhs - rhs, holds }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegimeCheck {
    pub valid: bool,
    pub inequalities: Vec<Inequality>,
}

/// Odd `d`: `pn >= pm >= (ln n)^4`. Even `d`: `p n^{1-ε} >= p m^{1-ε} >= (ln n)^4`.
pub fn regime_valid(m: usize, n: usize, p: f64, d: usize, epsilon: f64) -> RegimeCheck {
    let (mf, nf) = (m as f64, n as f64);
    let floor = nf.ln().powi(4);
    let inequalities = if d % 2 == 1 {
        vec![
            Inequality::new("p*n >= p*m", p * nf, p * mf),
            Inequality::new("p*m >= ln(n)^4", p * mf, floor),
        ]
    } else {
        let e = 1.0 - epsilon;
        vec![
            Inequality::new("p*n^(1-eps) >= p*m^(1-eps)", p * nf.powf(e), p * mf.powf(e)),
            Inequality::new("p*m^(1-eps) >= ln(n)^4", p * mf.powf(e), floor),
        ]
    };
    RegimeCheck { valid: inequalities.iter().all(|i| i.holds), inequalities }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiameterExpectation {
    /// Criterion positive: diameter at most `d + 1` expected.
    AtMostDPlus1,
    /// Criterion negative: diameter at least `d + 2` expected.
    AtLeastDPlus2,
    Indeterminate,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DiameterCriterion {
    pub value: f64,
    pub expectation: DiameterExpectation,
}

/// Odd `d`: `p^d (mn)^{(d-1)/2} - ln(mn)`. Even `d`: `p^d m^{d/2} n^{d/2-1} - 2 ln n`.
pub fn diameter_criterion(m: usize, n: usize, p: f64, d: usize) -> DiameterCriterion {
    diameter_criterion_with_band(m, n, p, d, DEFAULT_DEAD_BAND)
}

pub fn diameter_criterion_with_band(m: usize, n: usize, p: f64, d: usize, band: f64) -> DiameterCriterion {
    let (mf, nf, df) = (m as f64, n as f64, d as f64);
    let value = if d % 2 == 1 {
        p.powi(d as i32) * (mf * nf).powf((df - 1.0) / 2.0) - (mf * nf).ln()
    } else {
        p.powi(d as i32) * mf.powf(df / 2.0) * nf.powf(df / 2.0 - 1.0) - 2.0 * nf.ln()
    };
    let expectation = if value.abs() < band {
        DiameterExpectation::Indeterminate
    } else if value > 0.0 {
        DiameterExpectation::AtMostDPlus1
    } else {
        DiameterExpectation::AtLeastDPlus2
    };
    DiameterCriterion { value, expectation }
}

/// Probability that a fixed path is rainbow under a uniform random coloring.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RainbowProbability {
    #[serde(serialize_with = "serialize_ratio")]
    pub exact: BigRational,
    pub value: f64,
    /// `8^{-d}` for length `d + 1`, `4^{-d}` for length `d`.
    pub lower_bound: f64,
}

fn serialize_ratio<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

fn factorial(x: usize) -> BigUint {
    (1..=x).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `q1 = (d+1)!/(d+1)^{d+1}` for `path_len = d + 1`, `q2 = d!/d^d` for
/// `path_len = d`.
pub fn rainbow_success_prob(d: usize, path_len: usize) -> Result<RainbowProbability> {
    check_d(d)?;
    let (base, bound) = if path_len == d + 1 {
        (d + 1, 8f64.powi(-(d as i32)))
    } else if path_len == d {
        (d, 4f64.powi(-(d as i32)))
    } else {
        return Err(Error::InvalidArgument(format!("path_len must be d or d+1 (got {path_len} for d={d})")));
    };
    let exact = BigRational::new(
        factorial(base).into(),
        BigUint::from(base).pow(base as u32).into(),
    );
    let value = exact.to_f64().expect("ratio lies in (0, 1]");
    assert!(value >= bound, "rainbow probability {value} below its bound {bound}");
    Ok(RainbowProbability { exact, value, lower_bound: bound })
}

/// Probability that a path of `len` edges is rainbow when each edge draws
/// uniformly from `palette` colors: `palette!/(palette-len)! / palette^len`.
pub fn rainbow_prob_uniform(palette: usize, len: usize) -> f64 {
    if len > palette {
        return 0.0;
    }
    (0..len).map(|i| (palette - i) as f64 / palette as f64).product()
}

/// Upper bound on the chance that fewer than `k` of `N = 2^{10d} c0 ln n`
/// disjoint paths are rainbow.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FailureBound {
    /// `N`, the number of disjoint paths.
    pub path_count: f64,
    /// `min(q1, q2)`.
    pub q: f64,
    /// `ln[(N e/(k-1))^{k-1} (1-q)^{N-(k-1)}]`; no binomial factor when `k = 1`.
    pub ln_bound: f64,
    /// `exp(ln_bound)`, usually `0.0` after underflow.
    pub bound: f64,
    /// `-ln_bound / ln n`: the bound equals `n^{-exponent}`.
    pub exponent: f64,
    /// Closed form of the coarser chain `(e 2^{10d + 8^{-d}} / 2^{8^{-d} 2^{10d}})^{c0 ln n}`, in log space.
    pub chain_ln_bound: f64,
    pub below_n_pow_minus_100: bool,
}

pub fn per_pair_failure_bound(k: usize, d: usize, c0: f64, n: f64) -> Result<FailureBound> {
    check_d(d)?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if !(n >= 2.0 && n.is_finite()) {
        return Err(Error::InvalidArgument(format!("n must be >= 2 (got {n})")));
    }
    if !(c0 > 0.0 && c0.is_finite()) {
        return Err(Error::InvalidArgument(format!("c0 must be positive (got {c0})")));
    }
    let df = d as f64;
    let ln2 = std::f64::consts::LN_2;
    let ln_n = n.ln();
    let ln_scale = 10.0 * df * ln2;
    let path_count = ln_scale.exp() * c0 * ln_n;
    let j = (k - 1) as f64;
    if j > path_count {
        return Err(Error::InvalidArgument(format!("k - 1 = {j} exceeds the path count {path_count}")));
    }
    let q1 = rainbow_success_prob(d, d + 1)?.value;
    let q2 = rainbow_success_prob(d, d)?.value;
    let q = q1.min(q2);
    let binomial = if k == 1 { 0.0 } else { j * (path_count.ln() + 1.0 - j.ln()) };
    let ln_bound = binomial + (path_count - j) * (-q).ln_1p();
    let eight_d = 8f64.powf(-df);
    let chain_ln_bound = c0 * ln_n * (1.0 + (10.0 * df + eight_d) * ln2 - eight_d * ln_scale.exp() * ln2);
    let exponent = -ln_bound / ln_n;
    Ok(FailureBound {
        path_count,
        q,
        ln_bound,
        bound: ln_bound.exp(),
        exponent,
        chain_ln_bound,
        below_n_pow_minus_100: ln_bound <= -100.0 * ln_n,
    })
}

fn check_chernoff(mean: f64, frac: f64) -> Result<()> {
    if !(mean > 0.0 && mean.is_finite()) {
        return Err(Error::InvalidArgument(format!("mean must be positive (got {mean})")));
    }
    if !(frac > 0.0 && frac < 1.0) {
        return Err(Error::InvalidArgument(format!("frac must lie in (0, 1) (got {frac})")));
    }
    Ok(())
}

/// `Pr[X < (1 - frac) mean] <= exp(-frac^2 mean / 2)` for a sum of independent indicators.
pub fn chernoff_lower_tail(mean: f64, frac: f64) -> Result<f64> {
    Ok(chernoff_lower_tail_ln(mean, frac)?.exp())
}

/// Natural log of [`chernoff_lower_tail`]; does not underflow.
pub fn chernoff_lower_tail_ln(mean: f64, frac: f64) -> Result<f64> {
    check_chernoff(mean, frac)?;
    Ok(-frac * frac * mean / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1e-300)
    }

    #[test]
    fn p1_matches_corollary_form_on_square_graphs() {
        // With m = n, p1 = (2 ln n)^{1/d} / n^{(d-1)/d}.
        for &(n, d) in &[(100usize, 3usize), (1000, 5), (50, 7)] {
            let nf = n as f64;
            let df = d as f64;
            let expected = (2.0 * nf.ln()).powf(1.0 / df) / nf.powf((df - 1.0) / df);
            assert!(close(p1(n, n, d).unwrap(), expected, 1e-12));
            // Corollary form differs by exactly 2^{1/d}.
            let corollary = nf.ln().powf(1.0 / df) / nf.powf((df - 1.0) / df);
            assert!(close(p1(n, n, d).unwrap() / corollary, 2f64.powf(1.0 / df), 1e-12));
        }
    }

    #[test]
    fn p1_reference_value() {
        assert!((p1(100, 100, 3).unwrap() - 0.0972_9).abs() < 5e-5);
    }

    #[test]
    fn p1_decreasing_in_n() {
        for m in [10, 100, 1000] {
            for d in [3, 5] {
                let values: Vec<f64> = (2..200).map(|n| p1(m, n * 5, d).unwrap()).collect();
                assert!(values.windows(2).all(|w| w[1] < w[0]));
            }
        }
    }

    #[test]
    fn p2_reference_values() {
        let n = 400f64;
        assert!(close(p2(400, 400, 2).unwrap(), (n.ln() / n).sqrt(), 1e-14));
        assert!((p2(400, 400, 2).unwrap() - 0.12239).abs() < 5e-6);
        assert!((p2(10_000, 10_000, 4).unwrap() - 1.742e-3).abs() < 5e-7);
    }

    #[test]
    fn parity_is_enforced() {
        assert!(matches!(p1(10, 10, 2), Err(Error::ParityMismatch { .. })));
        assert!(matches!(p2(10, 10, 3), Err(Error::ParityMismatch { .. })));
    }

    #[test]
    fn lower_form_is_base_two_reading() {
        let (m, n, d) = (300usize, 500usize, 4usize);
        let expected = (n as f64).log2().powf(0.25) / ((m as f64).sqrt() * (n as f64).powf(0.25));
        assert!(close(p2_lower_form(m, n, d).unwrap(), expected, 1e-12));
    }

    #[test]
    fn regime_boundary_and_failures() {
        let n = 1000usize;
        let p = (n as f64).ln().powi(4) / n as f64;
        assert!(regime_valid(n, n, p, 3, 0.5).valid);
        assert!(!regime_valid(n + 1, n, 0.9, 3, 0.5).valid);
        let desk = regime_valid(400, 400, 0.12, 2, 0.5);
        assert!(!desk.valid);
        assert!(close(desk.inequalities[1].lhs, 2.4, 1e-12));
        assert!((desk.inequalities[1].rhs - 1288.0).abs() < 1.0);
    }

    #[test]
    fn criterion_substitutions() {
        let (m, n, d) = (300usize, 700usize, 3usize);
        let t = p1(m, n, d).unwrap();
        let c = diameter_criterion(m, n, 2.0 * t, d);
        let expected = 7.0 * ((m * n) as f64).ln();
        assert!(close(c.value, expected, 1e-12));
        assert_eq!(c.expectation, DiameterExpectation::AtMostDPlus1);

        let big = 1_000_000usize;
        let c = diameter_criterion(big, big, p1(big, big, 3).unwrap() / 2.0, 3);
        assert!(close(c.value, (0.125 - 1.0) * 1e12f64.ln(), 1e-10));
        assert_eq!(c.expectation, DiameterExpectation::AtLeastDPlus2);

        let c = diameter_criterion(m, n, diameter_threshold(m, n, 2).unwrap(), 2);
        assert!(c.value.abs() < 1e-9);
        assert_eq!(c.expectation, DiameterExpectation::Indeterminate);
    }

    #[test]
    fn criterion_sign_around_threshold() {
        for &m in &[1000usize, 5000] {
            for &n in &[1000usize, 20_000] {
                for d in 2..7 {
                    let star = diameter_threshold(m, n, d).unwrap();
                    for scale in [1.01, 1.5, 3.0] {
                        assert!(diameter_criterion(m, n, scale * star, d).value > 0.0);
                        assert!(diameter_criterion(m, n, star / scale, d).value < 0.0);
                    }
                }
            }
        }
    }

    #[test]
    fn rainbow_probabilities() {
        let q = rainbow_success_prob(2, 3).unwrap();
        assert_eq!(q.exact, BigRational::new(2.into(), 9.into()));
        let q = rainbow_success_prob(2, 2).unwrap();
        assert_eq!(q.exact, BigRational::new(1.into(), 2.into()));
        assert!(rainbow_success_prob(2, 4).is_err());
        for d in 2..=20 {
            assert!(rainbow_success_prob(d, d + 1).unwrap().value >= 8f64.powi(-(d as i32)));
            assert!(rainbow_success_prob(d, d).unwrap().value >= 4f64.powi(-(d as i32)));
        }
        assert!(close(rainbow_prob_uniform(3, 3), 2.0 / 9.0, 1e-15));
        assert!(close(rainbow_prob_uniform(3, 2), 2.0 / 3.0, 1e-15));
    }

    #[test]
    fn failure_bound_k1_has_no_binomial_factor() {
        let b = per_pair_failure_bound(1, 2, 1.0, 1000.0).unwrap();
        let expected = b.path_count * (1.0f64 - 2.0 / 9.0).ln();
        assert!(close(b.ln_bound, expected, 1e-12));
    }

    #[test]
    fn failure_bound_reference_point() {
        let n = 1e6f64;
        let k = n.ln().floor() as usize;
        let b = per_pair_failure_bound(k, 2, 1.0, n).unwrap();
        assert!(b.ln_bound <= -100.0 * n.ln());
        assert!(b.below_n_pow_minus_100);
        assert!(b.ln_bound <= b.chain_ln_bound);
        assert!(b.exponent > 100.0);
    }

    #[test]
    fn failure_bound_decreases_in_n_and_stays_finite() {
        let mut prev = f64::INFINITY;
        let mut n = 4f64;
        while n <= 1e12 {
            let k = (n.ln().floor() as usize).max(1);
            let b = per_pair_failure_bound(k, 2, 1.0, n).unwrap();
            assert!(b.ln_bound.is_finite());
            assert!(b.ln_bound < prev, "n = {n}");
            prev = b.ln_bound;
            n *= 1.5;
        }
    }

    #[test]
    fn failure_bound_rejects_bad_input() {
        assert!(per_pair_failure_bound(0, 2, 1.0, 100.0).is_err());
        assert!(per_pair_failure_bound(2, 2, 1.0, 1.0).is_err());
        assert!(per_pair_failure_bound(usize::MAX / 2, 2, 1.0, 100.0).is_err());
    }

    #[test]
    fn chernoff_values() {
        assert!(close(chernoff_lower_tail(1000.0, 0.8).unwrap(), (-320.0f64).exp(), 1e-12));
        assert!(chernoff_lower_tail(10.0, 1e-9).unwrap() > 1.0 - 1e-15);
        assert!(chernoff_lower_tail(0.0, 0.5).is_err());
        assert!(chernoff_lower_tail(1.0, 1.0).is_err());
    }

    #[test]
    fn regime_params_constants() {
        let r = RegimeParams::new(100, 200, 3, 5, 1.0, 0.5).unwrap();
        assert!(close(r.big_c1(), 2f64.powi(30), 1e-12));
        assert!(close(r.big_c2(), 2f64.powi(31), 1e-12));
        assert!(r.small_c1() > 0.0 && r.small_c1() < 1.0);
        assert!(r.small_c2() > 0.0 && r.small_c2() < 1.0);
        assert!(r.upper_probability().unwrap().symbolic_only);
        assert!(RegimeParams::new(100, 200, 1, 5, 1.0, 0.5).is_err());
        assert!(RegimeParams::new(100, 200, 3, 5, 0.5, 0.5).is_err());
        assert!(RegimeParams::new(100, 200, 3, 5, 1.0, 1.0).is_err());
        assert_eq!(RegimeParams::with_log_k(100, 1000, 3, 1.0, 0.5).unwrap().k, 6);
    }
}
