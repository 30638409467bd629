"""A variable of singleton type normalises to the singleton's element.

In the context ``v : {zero : Nat}``, ``v`` is not just some natural number:
it is definitionally ``zero``.  The checker accepts ``v : {zero : Nat}``
and normalisation replaces ``v`` by ``zero``.

    python3 demos/worked_example.py
"""

from singnbe import Session

s = Session()
s.assume("v", "{zero : Nat}")
s.check("v", "{zero : Nat}")
print("v : {zero : Nat}   accepted")
print("normal form of v  :", s.normalize("v", "Nat"))

# Singleton types nest: v also has type {zero : {zero : Nat}}.
s.check("v", "{zero : {zero : Nat}}")
print("v : {zero : {zero : Nat}}   accepted")

# A function whose result type mentions its argument.
s.define("pred", "Nat -> Nat", "\\n. natrec [_. Nat] zero (\\k _. k) n")
s.assume("f", "(n : Nat) -> {pred n : Nat}")
print("f (suc (suc zero)) :", s.normalize("f (suc (suc zero))", "Nat"))
