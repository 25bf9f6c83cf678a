/* Round-trips a Le diagram through its Grassmann necklace over the C ABI.
 *
 * Build (from the repository root, after `cargo build -p positroid-ffi`):
 *
 *   cc crates/ffi/examples/demo.c -Icrates/ffi/include \
 *      -Ltarget/debug -lpositroid_ffi -o demo
 *   LD_LIBRARY_PATH=target/debug ./demo
 */
#include <stdbool.h>
#include <stdio.h>
#include <stdlib.h>

#include "positroid.h"

static void check(PositroidStatus status, const char *what) {
    if (status != PositroidStatus_Ok) {
        const char *msg = positroid_last_error_message();
        fprintf(stderr, "%s failed (%d): %s\n", what, (int)status,
                msg ? msg : "no message");
        exit(1);
    }
}

int main(void) {
    const char *source = "3 8 rows=1,3,6\n++00+\n++0+\n0+";

    PositroidDiagram *diagram = NULL;
    check(positroid_diagram_parse(source, &diagram), "parse");

    printf("rank %u over ground set 1..%u, cell dimension %llu\n",
           positroid_diagram_rank(diagram),
           positroid_diagram_ground_set(diagram),
           (unsigned long long)positroid_diagram_dimension(diagram));

    char *art = NULL;
    check(positroid_diagram_render_ascii(diagram, &art), "render");
    printf("%s\n\n", art);
    positroid_string_free(art);

    PositroidNecklace *necklace = NULL;
    check(positroid_diagram_to_necklace(diagram, &necklace), "convert");

    char *terms = NULL;
    check(positroid_necklace_render(necklace, false, &terms), "render necklace");
    printf("necklace: %s\n", terms);
    positroid_string_free(terms);

    PositroidDiagram *back = NULL;
    check(positroid_necklace_to_diagram(necklace, &back), "convert back");

    char *text = NULL;
    check(positroid_diagram_render(back, &text), "render diagram");
    printf("round trip:\n%s\n", text);
    positroid_string_free(text);

    positroid_diagram_free(back);
    positroid_necklace_free(necklace);
    positroid_diagram_free(diagram);
    return 0;
}
