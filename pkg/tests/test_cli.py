import io
from pathlib import Path

import numpy as np
import pytest

from raman_correlate.cli import main
from raman_correlate.config import ConfigError, parse_config, parse_value
from raman_correlate.csvio import format_csv, read_csv, write_csv
from raman_correlate.errors import NumericalError, RamanError
from raman_correlate.results import SweepResult
from raman_correlate.runners import run_dynamics, run_polariton, run_validity, run_verify

CONFIGS = Path(__file__).resolve().parents[1] / "demos" / "configs"


def test_empty_and_single_key_configs():
    assert parse_config("").sections == {}
    cfg = parse_config("[system]\nomega_S = 1.0")
    assert cfg.sections == {"system": {"omega_S": 1.0}}


def test_duplicate_key_reported_at_its_line():
    with pytest.raises(ConfigError) as err:
        parse_config("[system]\nomega_S = 1.0\nomega_S = 2.0")
    assert err.value.line == 3


@pytest.mark.parametrize(
    "text, value",
    [("1.5", 1.5), ("-2e-3", -0.002), ("0.1+0.2i", 0.1 + 0.2j), ("3-i", 3 - 1j), ("2.5i", 2.5j), ('"log"', "log")],
)
def test_value_grammar(text, value):
    assert parse_value(text) == value


def test_comments_and_whitespace():
    cfg = parse_config('  # header\n[ sweep ]\n  T_spacing   =   "a # b"   # trailing\n')
    assert cfg.get("sweep", "T_spacing", kind=str) == "a # b"


@pytest.mark.parametrize(
    "text, fragment",
    [("[nonsense]\n", "unknown section"), ("x = 1\n", "outside"), ("[system]\nomega_S = abc\n", "cannot parse"), ("[system]\njunk\n", "expected")],
)
def test_syntax_errors(text, fragment):
    with pytest.raises(ConfigError, match=fragment):
        parse_config(text)


def test_unknown_key_rejected():
    cfg = parse_config("[system]\nomega_S = 1\nomega_A = 1\nomega_V = 1\ncolour = 2\n[sweep]\nt_start = 0\nt_stop = 1\n[phonons]\nn_bar = 0\n")
    with pytest.raises(ConfigError, match="colour"):
        run_dynamics(cfg)


def test_missing_required_key():
    cfg = parse_config("[system]\nomega_S = 1\nomega_A = 1\nomega_V = 1\n[phonons]\nn_bar = 0\n")
    with pytest.raises(ConfigError, match="t_start"):
        run_dynamics(cfg)


DYN_FREE = """
[system]
omega_S = 1.3
omega_A = 1.7
omega_V = 1.0
[phonons]
n_bar = 0.7
[sweep]
t_start = 0
t_stop = 10
t_steps = 11
"""


def test_dynamics_without_coupling_is_zero():
    res = run_dynamics(parse_config(DYN_FREE))
    for c in ("n_S", "n_A", "corr_SA", "C_cross", "Aprime", "Bprime", "Cprime"):
        assert np.all(res.column(c) == 0)
    assert len(res) == 11 and np.allclose(res.column("t"), np.linspace(0, 10, 11))


def test_dynamics_multimode_and_temperature():
    text = DYN_FREE.replace("omega_V = 1.0", "omega_V_1 = 1.0\ng_S_1 = 0.2\ng_A_1 = 0.1\nomega_V_2 = 1.2\ng_S_2 = 0.05\ng_A_2 = 0.0")
    text = text.replace("n_bar = 0.7", "T = 1.0\nmode = 1")
    res = run_dynamics(parse_config(text))
    assert res.column("n_S")[-1] > 0 and "designated mode index 1" in res.metadata["phonons"]


def test_dynamics_from_pump_amplitude():
    text = DYN_FREE.replace("omega_V = 1.0", "omega_V = 1.0\nM_S = 0.2\nM_A = 0.1\nalpha = 0.5i")
    assert run_dynamics(parse_config(text)).column("n_S")[-1] > 0


def test_polariton_without_coupling_is_two():
    cfg = parse_config("[system]\nomega_b = 200\ng_k = 0\n[sweep]\nT_start = 1\nT_stop = 2000\nT_steps = 25\n")
    assert np.all(run_polariton(cfg).column("G2") == 2.0)


def test_validity_quarter_rows():
    cfg = parse_config("[system]\nM_S = 3\nM_A = 1\n[sweep]\nn_V_start = 0\nn_V_stop = 0\nn_V_steps = 4\n")
    res = run_validity(cfg)
    assert np.all(res.column("tau2") == res.column("tau1") / 4)


TRIVIAL_VERIFY = """
[system]
omega_R = 10.0
omega_V = 1.0
M_S = 0
M_A = 0
alpha = 0
[oracle]
cutoff_R = 4
cutoff_S = 3
cutoff_A = 3
cutoff_V = 4
t = 1.0
eff_cutoff_S = 3
eff_cutoff_A = 3
eff_cutoff_V = 4
"""


def test_trivial_verification_passes():
    out = run_verify(parse_config(TRIVIAL_VERIFY))
    assert out.passed
    assert "overall: PASS" in out.report


def test_verify_requires_oracle_section():
    with pytest.raises(ConfigError):
        run_verify(parse_config("[system]\nomega_R = 10\nomega_V = 1\n"))


def test_csv_empty_result_and_round_trip(tmp_path):
    empty = SweepResult(("a", "b"), metadata={"note": "x"})
    assert format_csv(empty) == "# note: x\na,b\n"
    one = SweepResult(("a", "b"), [(1 / 3, -2.5e-17)])
    back = read_csv(format_csv(one))
    assert back.columns == ("a", "b")
    assert back.rows[0][0] == pytest.approx(1 / 3, rel=1e-12) and back.rows[0][1] == pytest.approx(-2.5e-17, rel=1e-12)
    buf = io.StringIO()
    write_csv(one, buf)
    assert buf.getvalue() == format_csv(one)
    with pytest.raises(RamanError, match="nonexistent"):
        write_csv(one, tmp_path / "nonexistent" / "out.csv")


def test_negative_zero_and_non_finite():
    assert format_csv(SweepResult(("x",), [(-0.0,)])).endswith("\n0\n")
    with pytest.raises(NumericalError):
        SweepResult(("x",), [(float("nan"),)])



@pytest.mark.parametrize("cmd", ["dynamics", "polariton", "validity"])
def test_cli_writes_file(tmp_path, cmd):
    out = tmp_path / f"{cmd}.csv"
    assert main([cmd, "--config", str(CONFIGS / f"{cmd}.cfg"), "--out", str(out)]) == 0
    assert out.read_text().count("\n") > 3


def test_cli_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.cfg"
    bad.write_text("[system]\nomega_S = 1\nomega_S = 1\n")
    assert main(["dynamics", "--config", str(bad)]) == 1
    assert "line 3" in capsys.readouterr().err
    assert main(["dynamics", "--config", str(tmp_path / "missing.cfg")]) == 1
    # coupling too strong for a stable polariton
    unstable = tmp_path / "unstable.cfg"
    unstable.write_text("[system]\nomega_b = 200\ng_k = 80\n[sweep]\nT_start = 1\nT_stop = 5\nT_steps = 2\n")
    assert main(["polariton", "--config", str(unstable)]) == 2
    small = tmp_path / "small.cfg"
    small.write_text(
        (CONFIGS / "verify.cfg").read_text().replace("cutoff_R = 16", "cutoff_R = 3").replace("cutoff_V = 36", "cutoff_V = 4")
    )
    assert main(["verify", "--config", str(small), "--out", str(tmp_path / "r.txt")]) == 3
    assert "INCONCLUSIVE" in (tmp_path / "r.txt").read_text()


def test_cli_stdout(capsys):
    assert main(["validity", "--config", str(CONFIGS / "validity.cfg")]) == 0
    assert capsys.readouterr().out.splitlines()[1] == "n_V,tau1,tau2"
