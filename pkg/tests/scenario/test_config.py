# mypy: disable-error-code=no-untyped-def

import math

import pytest

from iondirac.channel import PictureSign
from iondirac.dirac import IonParams
from iondirac.errors import InputError
from iondirac.scenario import ScenarioConfig, dump_scenario, load_scenario, parse_flat, read_ion_params, read_scenario


def test_parse_flat_skips_comments_and_blanks():
    text = "# header\n\nstate = werner\n  steps=10   # grid\nobservables = survival, purity\n"
    assert parse_flat(text) == {"state": "werner", "steps": "10", "observables": "survival, purity"}


@pytest.mark.parametrize("text, message", [("state cat", "expected 'key = value'"), ("a = 1\na = 2", "duplicate")])
def test_parse_flat_errors(text, message):
    with pytest.raises(InputError, match=message):
        parse_flat(text, "scenario.cfg")


def test_load_scenario_converts_values():
    cfg = load_scenario(
        "state = werner\nm_over_p = 10\nsteps = 101\nobservables = negativity,discord\n"
        "unitary = false\npicture_sign = inverse\nmeta.c1 = 3.0\n"
    )
    assert cfg.state == "werner"
    assert cfg.m_over_p == 10.0
    assert cfg.steps == 101
    assert cfg.observables == ("negativity", "discord")
    assert cfg.unitary is False
    assert cfg.picture_sign is PictureSign.INVERSE
    assert cfg.theta == pytest.approx(math.pi / 4)


@pytest.mark.parametrize("spelling", ["inverse", "paper_literal", "PAPER_LITERAL"])
def test_load_scenario_accepts_picture_sign_alias(spelling):
    cfg = load_scenario(f"picture_sign = {spelling}")
    assert cfg.picture_sign is PictureSign.INVERSE
    assert PictureSign(spelling) is PictureSign.INVERSE
    assert "picture_sign = inverse\n" in dump_scenario(cfg)


def test_load_scenario_rejects_unknown_keys():
    with pytest.raises(InputError, match="unknown key"):
        load_scenario("mass = 1")


@pytest.mark.parametrize(
    "text",
    [
        "steps = many",
        "m_over_p = -1",
        "state = bell",
        "observables = entropy",
        "picture_sign = backwards",
        "unitary = perhaps",
        "discord_side = 3",
        "state = custom",
        "amplitudes = 1,0,0,1",
    ],
)
def test_load_scenario_rejects_invalid_values(text):
    with pytest.raises(InputError):
        load_scenario(text)


def test_dump_and_load_round_trip():
    cfg = ScenarioConfig(
        state="custom",
        amplitudes=(1, 1j, 0, 0.5 - 0.25j),
        m_over_p=20.0,
        gamma_over_p=0.125,
        theta=0.3,
        observables=("negativity", "discord"),
        picture_sign="inverse",
        unitary=False,
    )
    assert load_scenario(dump_scenario(cfg)) == cfg
    assert load_scenario(dump_scenario(ScenarioConfig())) == ScenarioConfig()


def test_read_scenario(tmp_path):
    path = tmp_path / "scenario.cfg"
    path.write_text("state = basis:c\nt_max = 5\n")
    cfg = read_scenario(path)
    assert cfg.state == "basis:c"
    assert cfg.t_max == 5.0
    with pytest.raises(InputError, match="Cannot read"):
        read_scenario(tmp_path / "missing.cfg")


def test_read_ion_params(tmp_path):
    path = tmp_path / "ion.cfg"
    path.write_text("eta = 0.5\nomega_tilde = 0.5\ndelta = 1\nDelta = 0.5\nomega1 = 1, 1, 0\n")
    assert read_ion_params(path) == IonParams(eta=0.5, omega_tilde=0.5, delta=1.0, Delta=0.5, omega1=(1.0, 1.0, 0.0))


def test_read_ion_params_rejects_bad_vector(tmp_path):
    path = tmp_path / "ion.cfg"
    path.write_text("eta = 0.5\nomega_tilde = 0.5\ndelta = 1\nDelta = 0.5\nomega1 = 1, 1\n")
    with pytest.raises(InputError, match="3-vector"):
        read_ion_params(path)
