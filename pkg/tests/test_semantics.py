import pytest

from singnbe import config
from singnbe.errors import (BranchCountMismatch, EnvironmentShapeError,
                            NotAFunctionValue, NotANatural, NotAnEnumValue)
from singnbe.nbe import readback
from singnbe.semantics import (ConstV, EnumV, LamV, NatV, NeCase, NeFst,
                               NeNatrec, PairV, SucV, StarV, Top, VarV, ZeroV,
                               apply_v, case_v, eval_subst, eval_term, fst_v,
                               snd_v, natrec_v)
from singnbe.syntax import (App, Box, Case, Const, Empty, Enum, Ext, Id, Lam,
                            Nat, Natrec, P, Pair, Q, Star, Sub, Suc, Where,
                            Zero)

NAT = lambda _: NatV()
SUCC_STEP = LamV(lambda n: LamV(lambda r: SucV(r)))


def test_apply():
    assert apply_v(LamV(lambda d: d), ZeroV()) == ZeroV()
    assert apply_v(StarV(), ZeroV()) == StarV()
    with pytest.raises(NotAFunctionValue):
        apply_v(ZeroV(), ZeroV())


def test_projections():
    assert fst_v(PairV(ZeroV(), SucV(ZeroV()))) == ZeroV()
    assert snd_v(PairV(ZeroV(), SucV(ZeroV()))) == SucV(ZeroV())
    assert fst_v(StarV()) == StarV()
    assert snd_v(StarV()) == StarV()
    assert fst_v(VarV(0)) == NeFst(VarV(0))


def test_natrec_on_canonical_values():
    assert natrec_v(NAT, ZeroV(), SUCC_STEP, ZeroV()) == ZeroV()
    assert natrec_v(NAT, ZeroV(), SUCC_STEP, SucV(ZeroV())) == SucV(ZeroV())
    assert natrec_v(NAT, ZeroV(), SUCC_STEP, StarV()) == StarV()


def test_natrec_on_neutral_is_stuck():
    d = natrec_v(NAT, ZeroV(), SUCC_STEP, VarV(0))
    assert isinstance(d, NeNatrec)
    # The step is stored reified at Nat -> Nat -> Nat.
    assert readback(1, d.step) == Lam(Lam(Suc(Q())))


def test_natrec_rejects_non_numbers():
    with pytest.raises(NotANatural):
        natrec_v(NAT, ZeroV(), SUCC_STEP, ConstV(2, 0))


def test_natrec_handles_long_numerals():
    d = ZeroV()
    for _ in range(20_000):
        d = SucV(d)
    add_one = LamV(lambda n: LamV(lambda r: SucV(r)))
    out = natrec_v(NAT, ZeroV(), add_one, d)
    for _ in range(20_000):
        assert isinstance(out, SucV)
        out = out.tm
    assert out == ZeroV()


def test_case():
    assert case_v(2, NAT, [ZeroV(), SucV(ZeroV())], ConstV(2, 1)) == SucV(ZeroV())
    assert case_v(2, NAT, [ZeroV(), ZeroV()], StarV()) == StarV()


@pytest.mark.parametrize("n", range(5))
def test_case_weak_extensionality(n):
    k = VarV(3)
    branches = [ConstV(n, i) for i in range(n)]
    assert case_v(n, lambda _: EnumV(n), branches, k) is k


def test_case_on_neutral_is_stuck():
    d = case_v(2, NAT, [ZeroV(), SucV(ZeroV())], VarV(0))
    assert isinstance(d, NeCase)
    assert readback(1, d) == Case(2, Nat(), [Zero(), Suc(Zero())], Q())


def test_case_errors():
    with pytest.raises(BranchCountMismatch):
        case_v(2, NAT, [ZeroV()], ConstV(2, 0))
    with pytest.raises(NotAnEnumValue):
        case_v(2, NAT, [ZeroV(), ZeroV()], ZeroV())


def test_eval_term_examples():
    assert eval_term(Q(), PairV(Top(), ZeroV())) == ZeroV()
    assert eval_term(Box(Zero()), Top()) == StarV()
    assert eval_term(Star(), Top()) == StarV()
    assert eval_term(App(Lam(Q()), Zero()), Top()) == ZeroV()


def test_eval_where_ignores_its_proof():
    t = Where(Nat(), Suc(Sub(Q(), P())), Box(Zero()))
    env = PairV(Top(), ZeroV())
    assert eval_term(t, env) == SucV(ZeroV())


def test_eval_term_environment_errors():
    with pytest.raises(EnvironmentShapeError):
        eval_term(Q(), Top())
    with pytest.raises(EnvironmentShapeError):
        eval_term(Sub(Q(), P()), PairV(Top(), ZeroV()))


def test_eval_subst_examples():
    env = PairV(Top(), ZeroV())
    assert eval_subst(Id(), env) == env
    assert eval_subst(Empty(), env) == Top()
    assert eval_subst(Ext(P(), Zero()), PairV(Top(), SucV(ZeroV()))) == PairV(Top(), ZeroV())


def test_eval_natrec_and_case_terms():
    plus_two = Natrec(Nat(), Suc(Suc(Zero())), Lam(Lam(Suc(Q()))), Suc(Zero()))
    assert eval_term(plus_two, Top()) == SucV(SucV(SucV(ZeroV())))
    pick = Case(3, Nat(), [Zero(), Suc(Zero()), Zero()], Const(3, 1))
    assert eval_term(pick, Top()) == SucV(ZeroV())
    assert eval_term(Pair(Zero(), Enum(2)), Top()) == PairV(ZeroV(), EnumV(2))


def test_proof_relevant_mode_keeps_box_contents():
    with config.options(proof_relevant=True):
        assert eval_term(Box(Zero()), Top()) == ZeroV()
        t = Where(Nat(), Q(), Box(Suc(Zero())))
        assert eval_term(t, Top()) == SucV(ZeroV())
    assert eval_term(Box(Zero()), Top()) == StarV()
