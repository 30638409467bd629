"""Safe projection from length-indexed vectors.

``lookup`` takes a proof that the index is below the length.  The proof is
boxed in ``Prf``, so it carries no computational content: any two proofs
are equal and normal forms show them as ``*``.

    python3 demos/safe_lookup.py
"""

from pathlib import Path

from singnbe import Session, parse

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

s = Session()
for decl in parse((CORPUS / "vectors.tt").read_text()).decls:
    s.run_decl(decl)

vec = "(true, (false, c{1,0}))"
print("Vec Bool 2          =", s.normalize("Vec Bool (suc (suc zero))", "U"))
for index in ("zero", "(suc zero)"):
    term = f"lookup Bool (suc (suc zero)) {index} (box c{{1,0}}) {vec}"
    print(f"lookup at {index:10s} =", s.normalize(term, "Bool"))

# Out of range: Lt 2 2 reduces to Enum 0, so there is no proof to pass.
print("Lt 2 2              =", s.normalize("Lt (suc (suc zero)) (suc (suc zero))", "U"))

# Partially applied, lookup still normalises; the proof argument is erased.
s.assume("v", "Vec Bool (suc (suc zero))")
s.assume("p", "Prf (Lt zero (suc (suc zero)))")
print("lookup ... p v      =", s.normalize("lookup Bool (suc (suc zero)) zero p v", "Bool"))
