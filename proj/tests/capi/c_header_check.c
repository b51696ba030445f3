/* Compiles as plain C to guarantee the public header stays C-clean, and
 * exercises a minimal handle lifecycle. */
#include <focp/focp.h>

#include <math.h>
#include <stdio.h>
#include <string.h>

int main(void) {
    focp_solve_options options;
    focp_solve_options_init(&options);
    if (options.method != FOCP_METHOD_DIRECT) return 1;

    focp_problem* problem = NULL;
    if (focp_problem_builtin("tip", &problem) != FOCP_OK) return 1;

    focp_trajectory* trajectory = NULL;
    if (focp_solve(problem, 1.0, 1, &options, &trajectory) != FOCP_OK) return 1;
    if (focp_trajectory_points(trajectory) != 2) return 1;
    if (fabs(focp_trajectory_state(trajectory)[1] - 0.2) > 1e-12) return 1;
    if (strcmp(focp_trajectory_method(trajectory), "direct") != 0) return 1;

    focp_trajectory_free(trajectory);
    focp_problem_free(problem);

    if (strcmp(focp_status_name(FOCP_OK), "ok") != 0) return 1;
    printf("c header check ok\n");
    return 0;
}
