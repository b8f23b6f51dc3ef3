"""Run a handful of theorem checks over the corpus and summarize the verdicts.

The same reports come out of ``fitforge verify --check <id>``.
"""
import time

from fitforge import checks
from fitforge.corpus import load_corpus

corpus = load_corpus()
plan = [
    ("T1.0-1", "supersoluble", None),
    ("T1.1", "sigma_nilpotent", "2,5/3"),
    ("Tgb", "sigma_nilpotent", "2,3"),
    ("Hall", None, None),
    ("Kramer", None, None),
    ("P2", "nilpotent", None),
    ("L3.2", "supersoluble", None),
]
for check, formation, sigma in plan:
    start = time.perf_counter()
    report = checks.verify(check, corpus, formation, sigma)
    s = report.summary()
    print(f"{check:<7} {report.formation:<28} pass={s['pass']:<3} fail={s['fail']} skip={s['skip']} "
          f"instances={s['instances']:<6} {time.perf_counter() - start:5.1f}s")

# exploratory: where do S_F, C_F and Z_F part ways for the abelian groups?
found = checks.search_boundary(checks.fm.ABELIAN, corpus)
print("abelian boundary:", [r.group for r in found.records if r.witness.get("discrepancy")])
