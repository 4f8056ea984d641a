#include <stdio.h>
#include <string.h>

#include "rainbow_ffi.h"

#define CHECK(cond)                                                  \
    do {                                                             \
        if (!(cond)) {                                               \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                \
        }                                                            \
    } while (0)

int main(void) {
    RbGraph *g = NULL;
    CHECK(rb_graph_sample(3, 3, 1.0, 7, &g) == RB_STATUS_OK);
    CHECK(rb_graph_edge_count(g) == 9);

    size_t diam = 0;
    bool connected = false;
    CHECK(rb_graph_diameter(g, &diam, &connected) == RB_STATUS_OK);
    CHECK(connected && diam == 2);

    RbColoring *c = NULL;
    CHECK(rb_coloring_random(g, 9, 1, &c) == RB_STATUS_OK);
    bool ok = false;
    CHECK(rb_is_rainbow_k_connected(g, c, 1, 3, &ok) == RB_STATUS_OK);
    CHECK(ok);

    char *text = NULL;
    CHECK(rb_graph_to_text(g, &text) == RB_STATUS_OK);
    CHECK(strstr(text, "3 3") != NULL);
    rb_string_free(text);

    RbGraph *bad = NULL;
    CHECK(rb_graph_sample(3, 3, 1.5, 7, &bad) == RB_STATUS_INVALID_ARGUMENT);
    CHECK(bad == NULL);
    CHECK(rb_last_error_message() != NULL);

    double p2 = 0.0;
    CHECK(rb_p2(400, 400, 2, &p2) == RB_STATUS_OK);
    CHECK(p2 > 0.1223 && p2 < 0.1225);

    rb_coloring_free(c);
    rb_graph_free(g);
    puts("ok");
    return 0;
}
