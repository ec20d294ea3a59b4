import re

CRITERION_PATTERN = re.compile(r"test_criterion_(\d+)")

CRITERION_LABELS = {
    1: "worked 99-power example, fast and oracle paths agree within time budget",
    2: "square-sum sweep n<=200 over all coprime weights to 25, exact",
    3: "higher-order sums m in {3,4,5} respect the square-sum lower bound",
    4: "2-adic central binomials match the 1-bit count up to 100000",
    5: "Delannoy and Schroder 3-adic valuations exact to n=1000",
    6: "trinomial/Motzkin/Legendre/hexagonal/Catalan claims exact to n=300",
    7: "factor bounds and multinomial valuations for primes to 97, n<=500",
    8: "two-index family: bridge, recurrence and closed forms to n=40",
    9: "cross-multiplied identity suite over the stated ranges",
    10: "fast path answers at n=1e15 and 1e18 within stated budgets",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes: dict[int, str] = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance" not in nodeid:
                continue
            match = CRITERION_PATTERN.search(nodeid)
            if not match:
                continue
            k = int(match.group(1))
            verdict = "PASS" if status == "passed" else "FAIL"
            if outcomes.get(k) != "FAIL":
                outcomes[k] = verdict
    if not outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for k in sorted(outcomes):
        label = CRITERION_LABELS.get(k, "")
        terminalreporter.write_line(f"criterion {k}: {outcomes[k]} - {label}")
