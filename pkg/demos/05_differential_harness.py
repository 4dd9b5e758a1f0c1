"""Differential testing of the two conversion checkers.

The harness generates well-typed conversion queries from a seed, runs
both checkers on each, and reports agreements, disagreements, and fuel
exhaustion. Property suites check metatheory statements such as subject
reduction and canonicity on the same generator.
"""

from mlttcheck import SUITES, diff_run, property_run, render_report


def main():
    report = diff_run(50)
    print(render_report(report))

    for suite in sorted(SUITES):
        out = property_run(suite, 50)
        status = "ok" if not out.failures else f"{len(out.failures)} failures"
        print(f"{suite}: {out.total} samples, {status}")


if __name__ == "__main__":
    main()
