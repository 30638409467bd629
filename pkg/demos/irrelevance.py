"""What proof irrelevance allows and what it forbids.

``where [B] ([y] = p) b`` opens a proof ``p : Prf A`` as ``y : A`` inside
``b``, provided ``b`` does not depend on which proof it was given.

    python3 demos/irrelevance.py
"""

from singnbe import Session, TypeCheckError

s = Session()
s.assume("A", "U")
s.assume("B", "U")
s.assume("p", "Prf A")
s.assume("q", "Prf A")

# Any two proofs of the same proposition are equal.
s.check("p", "{q : Prf A}")
print("p = q : Prf A   accepted")

# Opening a proof to build another proof is fine.
s.define("psiPi", "Prf ((x : A) -> B) -> (x : A) -> Prf B",
         "\\f x. where [Prf B] ([g] = f) (box (g x))")
print("psiPi           accepted")

# Returning the proof's content as an ordinary value is not.
try:
    s.define("phiPi", "((x : A) -> Prf B) -> Prf ((x : A) -> B)",
             "\\f. box (\\x. where [B] ([y] = f x) y)")
except TypeCheckError as err:
    print("phiPi           rejected:", err)

# Enum 1 behaves the same way: it has exactly one element up to equality.
s.assume("u", "Enum 1")
print("normal form of u:", s.normalize("u", "Enum 1"))
