from docketd import pdf
from docketd.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestEvalCommand:
    def test_summary_table(self, tmp_path, capsys):
        scores = tmp_path / "scores.csv"
        scores.write_text(
            "# expert ratings\n"
            "Quality,4.20\n"
            "Usability,4.42\n"
            "Satisfaction,4.19\n"
        )
        code, out, _ = run(["eval", "--scores", str(scores)], capsys)
        assert code == 0
        assert "Quality" in out and "4.20" in out
        assert "Overall Mean  4.27  Very Good" in out

    def test_scores_are_averaged_per_group(self, tmp_path, capsys):
        scores = tmp_path / "scores.csv"
        scores.write_text("Quality,4\nQuality,5\nUsability,5\nSatisfaction,5\n")
        code, out, _ = run(["eval", "--scores", str(scores)], capsys)
        assert code == 0
        assert "Quality       4.50  Excellent" in out

    def test_bad_row_reports_location(self, tmp_path, capsys):
        scores = tmp_path / "scores.csv"
        scores.write_text("Quality,4.2\nnonsense line\n")
        code, _, err = run(["eval", "--scores", str(scores)], capsys)
        assert code == 2
        assert ":2:" in err


class TestStoreCommands:
    def test_seed_user_and_report(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("DOCKETD_DATA_DIR", str(tmp_path / "data"))
        monkeypatch.setenv("DOCKETD_XOR_KEY", "a1b2c3d4e5f60718")

        code, out, _ = run(["seed-demo"], capsys)
        assert code == 0
        assert "RAB-IV-06-00001-22" in out
        assert "ela / executive-2022" in out

        code, out, _ = run(
            ["user", "add", "--username", "arbiter5", "--password", "arbiter-five-1",
             "--role", "LaborArbiter", "--office", "5"],
            capsys,
        )
        assert code == 0
        assert "created user arbiter5" in out

        out_pdf = tmp_path / "report.pdf"
        code, out, _ = run(
            ["report", "--type", "Regular", "--remark", "MandatoryConference",
             "--from", "2022-06-01", "--to", "2022-06-30", "--out", str(out_pdf)],
            capsys,
        )
        assert code == 0
        assert "wrote 2 rows" in out
        text = "\n".join(pdf.extract_text(out_pdf.read_bytes()))
        assert "RAB-IV-06-00001-22" in text
        assert "A***** B********" in text  # masked, never the full name

    def test_duplicate_seed_fails_cleanly(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("DOCKETD_DATA_DIR", str(tmp_path / "data"))
        monkeypatch.setenv("DOCKETD_XOR_KEY", "aa")
        assert run(["seed-demo"], capsys)[0] == 0
        code, _, err = run(["seed-demo"], capsys)
        assert code == 2
        assert "already" in err

    def test_missing_key_is_a_config_error(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("DOCKETD_DATA_DIR", str(tmp_path / "data"))
        monkeypatch.delenv("DOCKETD_XOR_KEY", raising=False)
        code, _, err = run(["seed-demo"], capsys)
        assert code == 2
        assert "DOCKETD_XOR_KEY" in err
