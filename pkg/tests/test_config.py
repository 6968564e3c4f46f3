import pytest
from hypothesis import given, strategies as st

from fiscal_composition.config import RunConfig, load, parse, render
from fiscal_composition.errors import ConfigError
from fiscal_composition.simulator import ModelParams


def test_default_round_trip():
    cfg = RunConfig()
    assert parse(render(cfg)) == cfg
    assert render(parse(render(cfg))) == render(cfg)


@given(phi=st.floats(0, 1), psi=st.floats(0, 0.25), T=st.integers(1, 60), seed=st.integers(0, 2**63),
       draws=st.integers(1, 10_000), csv=st.booleans())
def test_round_trip_lossless(phi, psi, T, seed, draws, csv):
    cfg = RunConfig(model=ModelParams(phi=phi, psi=psi, T=T), seed=seed, n_draws=draws, csv=csv)
    assert parse(render(cfg)) == cfg


def test_partial_config_uses_defaults():
    cfg = parse("[model]\nphi = 0.5\n[montecarlo]\nseed = 3\n")
    assert cfg.model.phi == 0.5 and cfg.model.psi == 0.12 and cfg.seed == 3 and cfg.n_draws == 3000


def test_ranges_section():
    cfg = parse("[ranges]\nphi = 0.2, 0.9\n")
    assert cfg.ranges["phi"] == (0.2, 0.9) and cfg.ranges["psi"] == (0.0, 0.25)


@pytest.mark.parametrize("text, fragment", [
    ("[model]\ngamma = 1\n", "gamma"),
    ("[plots]\nx = 1\n", "plots"),
    ("[montecarlo]\nthreads = 2\n", "threads"),
    ("[model]\ncbar = 1.2\n", "cbar"),
    ("[model]\nphi = high\n", "phi"),
    ("[ranges]\nphi = 0.5\n", "phi"),
    ("[output]\ncsv = maybe\n", "csv"),
    ("[model]\nT = 2.5\n", "T"),
    ("not an ini file", "malformed"),
])
def test_bad_config_names_offender(text, fragment):
    with pytest.raises(ConfigError, match=fragment):
        parse(text)


def test_load_from_file(tmp_path):
    path = tmp_path / "run.ini"
    path.write_text(render(RunConfig(seed=9)))
    assert load(path).seed == 9
