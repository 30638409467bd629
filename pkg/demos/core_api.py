"""Working with core terms directly.

Core terms use de Bruijn indices and explicit substitutions.  ``mk_var(i)``
is the variable bound ``i`` binders out; ``Sub(t, s)`` applies the
substitution ``s`` to ``t``.  Contexts are tuples listed innermost first.

    python3 demos/core_api.py
"""

from singnbe import check_term, eq_term, nbe_term, print_term
from singnbe.syntax import (App, Ext, Fun, Id, Lam, Nat, Natrec, P, Q, Sub, Suc,
                            Zero, mk_var)

# add m n = natrec [_. Nat] m (\k r. suc r) n
add = Lam(Lam(Natrec(Nat(), mk_var(1), Lam(Lam(Suc(Q()))), Q())))
add_ty = Fun(Nat(), Fun(Nat(), Nat()))
check_term((), add_ty, add)
print("add :", print_term(add))


def numeral(k):
    t = Zero()
    for _ in range(k):
        t = Suc(t)
    return t


five = nbe_term((), Nat(), App(App(add, numeral(2)), numeral(3)))
print("add 2 3 =", print_term(five))

# In the context n : Nat, add n zero computes to n while add zero n is stuck
# on n: recursion is on the second argument.
g = (Nat(),)
n = mk_var(0)
print("add n 0 =", print_term(nbe_term(g, Nat(), App(App(add, n), Zero())), ctx_names=("n",)))
print("add 0 n =", print_term(nbe_term(g, Nat(), App(App(add, Zero()), n)), ctx_names=("n",)))
print("add 0 n = n ?", eq_term(g, Nat(), App(App(add, Zero()), n), n))

# Explicit substitution: (suc q)[id, 3] is 4.
print("(suc q)[id, 3] =", print_term(nbe_term((), Nat(), Sub(Suc(Q()), Ext(Id(), numeral(3))))))
# Weakening: q[p] in the context (x : Nat, y : Nat) is x.
print("q[p] =", print_term(nbe_term((Nat(), Nat()), Nat(), Sub(Q(), P())), ctx_names=("y", "x")))
