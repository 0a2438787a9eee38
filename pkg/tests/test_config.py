"""Configuration file loading and validation."""

import pytest

from weylstd import ConfigError, PrimeField, QQ, RunConfig, load_config


def _write(tmp_path, text):
    path = tmp_path / "run.cfg"
    path.write_text(text)
    return str(path)


def test_full_config(tmp_path):
    path = _write(
        tmp_path,
        """
        # V-filtration on the second variable
        n = 2
        p = [0, -1]
        q = [0, 1]
        tiebreak = "deglex"
        var_order = ["D2", "D1", "x2", "x1"]
        field = "fp(7)"
        degree_cap = 10
        output = "json"
        """,
    )
    cfg = load_config(path)
    assert cfg.n == 2
    assert cfg.p == (0, -1) and cfg.q == (0, 1)
    assert cfg.tiebreak == "deglex"
    assert cfg.degree_cap == 10
    assert cfg.output == "json"
    assert cfg.scalar_field() == PrimeField(7)
    ctx = cfg.order_context()
    assert ctx.form.value((0, 1, 0, 0)) == -1
    # D2 is the smallest variable under this ordering
    assert ctx.tiebreak.perm == (3, 2, 1, 0)


def test_defaults(tmp_path):
    cfg = load_config(_write(tmp_path, "n = 3"))
    assert cfg.p == (0, 0, 0)
    assert cfg.q == (1, 1, 1)  # order filtration by default
    assert cfg.tiebreak == "degrevlex"
    assert cfg.var_order == ("x1", "x2", "x3", "D1", "D2", "D3")
    assert cfg.field == "rational"
    assert cfg.scalar_field() is QQ
    assert cfg.degree_cap == 64
    assert cfg.output == "text"


def test_comments_and_blank_lines(tmp_path):
    cfg = load_config(_write(tmp_path, '\n# header\nn = 1   # trailing\n\nfield = "rational"\n'))
    assert cfg.n == 1


def test_missing_n(tmp_path):
    with pytest.raises(ConfigError, match="missing required key 'n'"):
        load_config(_write(tmp_path, "p = [1]"))


def test_unknown_key(tmp_path):
    with pytest.raises(ConfigError, match="unknown key"):
        load_config(_write(tmp_path, "n = 1\ndegre_cap = 3"))


def test_duplicate_key(tmp_path):
    with pytest.raises(ConfigError, match="duplicate"):
        load_config(_write(tmp_path, "n = 1\nn = 2"))


def test_inadmissible_weights(tmp_path):
    with pytest.raises(ConfigError, match="not admissible"):
        load_config(_write(tmp_path, "n = 1\np = [-2]\nq = [1]"))


def test_wrong_vector_length(tmp_path):
    with pytest.raises(ConfigError, match="list of 2 integers"):
        load_config(_write(tmp_path, "n = 2\np = [1]\nq = [1, 1]"))


def test_nonprime_field(tmp_path):
    with pytest.raises(ConfigError, match="not prime"):
        load_config(_write(tmp_path, 'n = 1\nfield = "fp(6)"'))
    with pytest.raises(ConfigError, match="field must be"):
        load_config(_write(tmp_path, 'n = 1\nfield = "float"'))


def test_bad_tiebreak_and_var_order(tmp_path):
    with pytest.raises(ConfigError, match="tiebreak must be"):
        load_config(_write(tmp_path, 'n = 1\ntiebreak = "grlex"'))
    with pytest.raises(ConfigError, match="var_order"):
        load_config(_write(tmp_path, 'n = 1\nvar_order = ["x1"]'))
    with pytest.raises(ConfigError, match="exactly once"):
        load_config(_write(tmp_path, 'n = 1\nvar_order = ["x1", "x1"]'))
    with pytest.raises(ConfigError, match="not a variable"):
        load_config(_write(tmp_path, 'n = 1\nvar_order = ["x1", "D2"]'))


def test_syntax_errors(tmp_path):
    with pytest.raises(ConfigError, match="expected key = value"):
        load_config(_write(tmp_path, "n: 1"))
    with pytest.raises(ConfigError, match="cannot parse value"):
        load_config(_write(tmp_path, "n = one"))
    with pytest.raises(ConfigError, match="cannot read config"):
        load_config(str(tmp_path / "missing.cfg"))


def test_default_constructor_validates():
    with pytest.raises(ConfigError):
        RunConfig(n=1, p=(-1,), q=(0,))
    with pytest.raises(ConfigError):
        RunConfig(n=0, p=(), q=())
    cfg = RunConfig.default(2)
    assert cfg.order_context().n == 2
