# Ranks, Friedman test and Nemenyi critical difference from a score table.
#
# The table used here is the published linear-kernel AUC table kept
# with the tests (29 datasets x 6 algorithms).

from pathlib import Path

from fuzzytwin.cli import rank_report

table = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "keel_linear_auc.csv"
out = Path("rank_demo")
report = rank_report(table, out)["all"]

rt, fr = report["table"], report["friedman"]
for name, r in zip(rt.algorithms, rt.avg_ranks):
    print(f"{name:12s} average rank {r:.3f}")

print(f"chi2_F = {fr.chi2:.3f}  F_F = {fr.ff:.3f}  critical F(0.05) = {fr.ff_critical():.3f}")
print(f"CD = {report['cd']:.3f}")
for i, j, gap, sig in report["pairs"]:
    if sig:
        print("significant:", rt.algorithms[i], "vs", rt.algorithms[j], round(gap, 3))

print((out / "stats.txt").read_text())
