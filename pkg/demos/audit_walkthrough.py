"""
Auditing the inequality ledger
==============================

Every numeric inequality is instantiated over its parameter range and
compared with exact integers and fractions.  The stated failures and the
tail certificates are printed at the end.
"""
from __future__ import annotations

from triorient.audit import exponent_dominance, run_audit, verify_lemma_claim

rep = run_audit(200)
print(f"{len(rep.records)} instances")
for group in rep.summary():
    print(" ", group.line())

# the handful of stated instances that do not hold
for r in rep.stated_failures[:5]:
    print("failed:", r.id, r.p, r.lhs, r.relation, r.rhs)

# tail certificates cover all n past the audited range
for case in ("grandever1", "grandever2", "grandever8"):
    print(exponent_dominance(case, 200).line())

print(verify_lemma_claim().line())
