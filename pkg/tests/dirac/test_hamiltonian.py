# mypy: disable-error-code=no-untyped-def

import math

import numpy
import pytest

from iondirac.dirac import (
    DiracParams,
    GeneralizedParams,
    beta,
    build_hd,
    build_hg,
    gamma5,
    invariants,
    invariants_from_trace,
    operator_o,
    operator_o_closed_form,
)
from iondirac.errors import InputError
from iondirac.qmat import identity2, identity4, kron, pauli

SQRT5 = math.sqrt(5)


def random_generalized(rng: numpy.random.Generator) -> GeneralizedParams:
    vec = lambda: tuple(float(x) for x in rng.uniform(-1.5, 1.5, size=3))  # noqa: E731
    return GeneralizedParams(
        m=float(rng.uniform(0, 2)),
        P=vec(),
        nu=float(rng.uniform(-1, 1)),
        q=float(rng.uniform(-1, 1)),
        W=vec(),
        kappa_a=float(rng.uniform(-1.5, 1.5)),
        mu_a=float(rng.uniform(-1.5, 1.5)),
        B=vec(),
    )


def random_dirac(rng: numpy.random.Generator) -> DiracParams:
    return DiracParams(
        m=float(rng.uniform(0, 3)),
        p=float(rng.uniform(0.1, 3)),
        E=float(rng.uniform(0.1, 3)),
        kappa=float(rng.uniform(-2, 2)),
        mu=float(rng.uniform(-2, 2)),
        theta=float(rng.uniform(0, 2 * math.pi)),
    )


@pytest.fixture
def rng() -> numpy.random.Generator:
    return numpy.random.default_rng(7)


def test_dirac_params_validation():
    with pytest.raises(InputError, match="At least one of p or E"):
        DiracParams(m=1.0, p=0.0, E=0.0)
    with pytest.raises(InputError):
        DiracParams(m=-1.0, p=1.0, E=0.0)
    with pytest.raises(InputError):
        DiracParams(m=0.0, p=1.0, E=1.0, gamma_rate=-0.1)


def test_build_hd_mass_term():
    # p = E = 0 is not a valid parameter set, so isolate the mass term by linearity
    diff = build_hd(DiracParams(m=1.0, p=1.0, E=0.0)) - build_hd(DiracParams(m=0.0, p=1.0, E=0.0))
    numpy.testing.assert_allclose(diff, numpy.diag([1, 1, -1, -1]), atol=1e-15)


def test_build_hd_kinetic_term():
    numpy.testing.assert_allclose(build_hd(DiracParams(m=0.0, p=1.0, E=0.0)), kron(pauli("x"), pauli("x")), atol=0)


def test_build_hd_reference_spectrum():
    h = build_hd(DiracParams(m=0.0, p=1.0, E=1.0))
    numpy.testing.assert_allclose(numpy.linalg.eigvalsh(h), [-SQRT5, -1, 1, SQRT5], atol=1e-12)


def test_build_hd_hermitian_and_traceless(rng):
    for _ in range(20):
        h = build_hd(random_dirac(rng))
        numpy.testing.assert_allclose(h, h.conj().T, atol=1e-14)
        assert abs(numpy.trace(h)) < 1e-14


def test_build_hg_mass_only():
    numpy.testing.assert_allclose(build_hg(GeneralizedParams(m=2.0)), numpy.diag([2, 2, -2, -2]), atol=0)


def test_build_hg_reduces_to_build_hd(rng):
    for _ in range(20):
        params = random_dirac(rng)
        numpy.testing.assert_allclose(build_hg(params.to_generalized()), build_hd(params), atol=1e-13)


def test_build_hg_pseudoscalar_term():
    h = build_hg(GeneralizedParams(nu=1.0))
    numpy.testing.assert_allclose(h, 1j * beta() @ gamma5(), atol=0)
    numpy.testing.assert_allclose(numpy.linalg.eigvalsh(h), [-1, -1, 1, 1], atol=1e-12)


def test_build_hg_hermitian_and_traceless(rng):
    for _ in range(20):
        h = build_hg(random_generalized(rng))
        numpy.testing.assert_allclose(h, h.conj().T, atol=1e-14)
        assert abs(numpy.trace(h)) < 1e-13


@pytest.mark.parametrize(
    "params, expected",
    [
        (DiracParams(m=0.0, p=1.0, E=1.0), (3.0, 1.0)),
        (DiracParams(m=1.0, p=1.0, E=1.0), (4.0, 2.0)),
        (GeneralizedParams(P=(2.0, 0.0, 0.0)), (4.0, 0.0)),
    ],
)
def test_invariants_examples(params, expected):
    numpy.testing.assert_allclose(invariants(params), expected, atol=1e-12)
    h = build_hg(params.to_generalized()) if isinstance(params, DiracParams) else build_hg(params)
    numpy.testing.assert_allclose(invariants_from_trace(h), expected, atol=1e-12)


def test_invariants_match_trace_oracle(rng):
    for _ in range(100):
        params = random_generalized(rng)
        numpy.testing.assert_allclose(
            invariants(params), invariants_from_trace(build_hg(params)), rtol=1e-10, atol=1e-10
        )


def test_hd_c2_matches_field_formula():
    # g2 = E^2 [m^2 kappa^2 + (mu^2 + kappa^2) p^2 / 2] at theta = pi/4
    m, p, E, kappa, mu = 1.3, 0.7, 0.9, 1.1, -0.4
    _, c2 = invariants(DiracParams(m=m, p=p, E=E, kappa=kappa, mu=mu))
    assert c2 == pytest.approx(E**2 * (m**2 * kappa**2 + (mu**2 + kappa**2) * p**2 / 2), rel=1e-12)


def test_operator_o_free_particle():
    o = operator_o(GeneralizedParams(m=1.0, P=(0.3, -0.2, 0.5)))
    numpy.testing.assert_allclose(o, numpy.zeros((4, 4)), atol=1e-14)


@pytest.mark.parametrize("m, g2", [(0.0, 1.0), (1.0, 2.0)])
def test_operator_o_squares_to_g2(m, g2):
    o = operator_o(DiracParams(m=m, p=1.0, E=1.0))
    numpy.testing.assert_allclose(o @ o, g2 * identity4(), atol=1e-12)


def test_operator_o_traceless(rng):
    for _ in range(20):
        assert abs(numpy.trace(operator_o(random_generalized(rng)))) < 1e-10


def test_operator_o_orthogonal_to_hd(rng):
    for _ in range(20):
        params = random_dirac(rng)
        assert abs(numpy.trace(operator_o(params) @ build_hd(params))) < 1e-10


def test_operator_o_square_on_dirac_configuration(rng):
    for _ in range(50):
        params = random_dirac(rng)
        _, c2 = invariants(params)
        o = operator_o(params)
        numpy.testing.assert_allclose(o @ o, c2 * identity4(), atol=1e-10 * max(c2, 1.0))


def test_operator_o_closed_form(rng):
    for _ in range(50):
        params = random_generalized(rng)
        numpy.testing.assert_allclose(operator_o_closed_form(params), operator_o(params), atol=1e-12)


def test_dirac_matrices_anticommute():
    b = beta()
    g5 = gamma5()
    numpy.testing.assert_allclose(b @ g5 + g5 @ b, numpy.zeros((4, 4)), atol=0)
    numpy.testing.assert_allclose(kron(pauli("z"), identity2()), b, atol=0)
