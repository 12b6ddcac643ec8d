import json

import pytest
from hypothesis import given, settings, strategies as st

from cifano.errors import ParameterError
from cifano.invariants import Parameters
from cifano.polyring import HomogPoly, ideal_plane_bases
from cifano.sampler import assemble_g, c_index, one_hot_sample, sample_ci

PARAMS = [Parameters(3, 1, (4,)), Parameters(4, 2, (3,)), Parameters(5, 1, (2, 2, 2)),
          Parameters(4, 1, (3,)), Parameters(4, 2, (2, 2)), Parameters(6, 2, (2, 3))]


def standard_plane_matrix(m, k):
    return [[int(i == j) for j in range(m + 1)] for i in range(k + 1)]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(PARAMS), st.sampled_from([5, 7, 1009]), st.integers(0, 2**32))
def test_sample_invariants(params, p, seed):
    m, k = params.m, params.k
    s = sample_ci(params, p, seed)
    B = standard_plane_matrix(m, k)
    for i, (g, di) in enumerate(zip(s.g, params.d)):
        assert g.degree == di and g.num_vars == m + 1 and not g.is_zero()
        assert g.substitute_linear(B).is_zero()
        assert all(sum(mu[k + 1:]) >= 1 for mu in g.coeffs)
        linear_part = {mu: c for mu, c in g.coeffs.items() if sum(mu[k + 1:]) == 1}
        rebuilt = HomogPoly.zero(m + 1, di, p)
        for h in range(k + 1, m + 1):
            lifted = HomogPoly(m + 1, di - 1, p,
                               {mu + (0,) * (m - k): c
                                for mu, c in s.p_poly(i, h).coeffs.items()})
            rebuilt = rebuilt + HomogPoly.variable(h, m + 1, p) * lifted
        assert rebuilt == HomogPoly(m + 1, di, p, linear_part)
        assert all(sum(mu[k + 1:]) >= 2 for mu in (g - rebuilt).coeffs)


def test_determinism():
    params = Parameters(3, 1, (4,))
    a, b = sample_ci(params, 7, 0), sample_ci(params, 7, 0)
    assert a.c == b.c
    assert [g.coeffs for g in a.g] == [g.coeffs for g in b.g]
    assert sample_ci(params, 7, 1).c != a.c


def test_free_coefficient_count():
    params = Parameters(3, 1, (4,))
    s = sample_ci(params, 1009, 12345)
    ideal, square = ideal_plane_bases(4, 3, 1)
    assert len(s.c) == 2 * 4
    assert s.coefficient_count() == 30 == len(ideal)


def test_golden_fixture(fixtures_dir):
    data = json.loads((fixtures_dir / "sample_m3k1d4_p7_seed0.json").read_text())
    s = sample_ci(Parameters(**{**data["params"], "d": tuple(data["params"]["d"])}),
                  data["p"], data["seed"])
    assert s.attempt == data["attempt"]
    assert [g.render() for g in s.g] == data["g"]


def test_assemble_one_hot():
    params = Parameters(3, 1, (4,))
    s = one_hot_sample(params, 7, {(0, 2, (3, 0)): 1})
    assert s.g[0] == HomogPoly(4, 4, 7, {(3, 0, 1, 0): 1})


def test_assemble_all_zero_gives_zero():
    params = Parameters(3, 1, (4,))
    c = {idx: 0 for idx in c_index(params)}
    g = assemble_g(c, [HomogPoly.zero(4, 4, 7)], params, 7)
    assert g[0].is_zero()


def test_assemble_missing_index():
    params = Parameters(3, 1, (4,))
    c = {idx: 1 for idx in c_index(params)[1:]}
    with pytest.raises(ParameterError, match="missing"):
        assemble_g(c, [HomogPoly.zero(4, 4, 7)], params, 7)


def test_zero_equation_is_resampled(monkeypatch):
    import cifano.sampler as sampler
    params = Parameters(3, 1, (4,))
    real_draw = sampler._draw
    calls = []

    def zero_first(params, p, seed, attempt):
        calls.append(attempt)
        c, r = real_draw(params, p, seed, attempt)
        if attempt == 0:
            c = {idx: 0 for idx in c}
            r = tuple(HomogPoly.zero(ri.num_vars, ri.degree, p) for ri in r)
        return c, r

    monkeypatch.setattr(sampler, "_draw", zero_first)
    s = sampler.sample_ci(params, 7, 3)
    assert calls == [0, 1]
    assert s.attempt == 1 and not s.g[0].is_zero()
    monkeypatch.undo()
    assert sampler._draw(params, 7, 3, 1)[0] == s.c


def test_bad_inputs():
    with pytest.raises(ParameterError):
        sample_ci(Parameters(3, 1, (4,)), 8, 0)
    with pytest.raises(ParameterError):
        sample_ci(Parameters(3, 1, (4,)), 7, -1)
