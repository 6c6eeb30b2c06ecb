import os
import time

from monideal import PowerCache
from monideal.corpus import FAMILY_GRID, PATTERN_CASES, run_selftest
from monideal.formats import to_json
from monideal.persistence import analyze_family, colon_pattern, detect_fluctuation

# scan every family member and worked example, writing one JSON report each
os.makedirs("reports", exist_ok=True)
cache = PowerCache(os.environ.get("MONIDEAL_CACHE_DIR"))

t0 = time.time()
for m, r in FAMILY_GRID:
    report = analyze_family(m, r, cache=cache)
    with open(os.path.join("reports", f"family_m{m}_r{r}.json"), "w", encoding="utf-8") as f:
        f.write(to_json(report))
    print(f"family m={m} r={r}: spi {report.spi.observed_spi}, fluctuation {report.fluctuation.verdict.value}")

for case in PATTERN_CASES:
    verdict = detect_fluctuation(colon_pattern(case.parse(), case.horizon, cache))
    with open(os.path.join("reports", f"{case.name}.json"), "w", encoding="utf-8") as f:
        f.write(to_json(verdict))
    print(f"{case.name}: {'/'.join(verdict.pattern.labels())} -> {verdict.verdict.value}")

table = run_selftest(cache)
with open(os.path.join("reports", "selftest.json"), "w", encoding="utf-8") as f:
    f.write(to_json(table))
t1 = time.time()

print(f"selftest {'passed' if table.passed else 'FAILED'}; scanning took {t1 - t0:.2f} seconds")
