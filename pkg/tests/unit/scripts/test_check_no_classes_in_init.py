import pytest

from scripts.check_no_classes_in_init import init_files, main, violations


def test_reexports_only_are_allowed():
    code = '"""Doc."""\n\nfrom .models import A\nimport os\n\n__all__ = ["A"]\n'

    assert violations(code) == []


@pytest.mark.parametrize(
    "code,expected",
    [
        ("class Thing:\n    pass\n", ["line 1: ClassDef"]),
        ("def helper():\n    return 1\n", ["line 1: FunctionDef"]),
        ("import os\nLIMIT = 3\n", ["line 2: Assign"]),
        ("__all__ = sorted(['a'])\n", ["line 1: Assign"]),
    ],
)
def test_definitions_are_reported(code, expected):
    assert violations(code) == expected


def test_syntax_errors_are_reported():
    (problem,) = violations("class :\n")

    assert problem.startswith("syntax error:")


def test_only_init_files_are_checked(tmp_path):
    init = tmp_path / "__init__.py"
    other = tmp_path / "models.py"

    assert init_files([str(init), str(other)]) == [init]


def test_package_init_files_pass(capsys):
    assert init_files([])
    assert main([]) == 0
    assert capsys.readouterr().out == ""


def test_main_flags_offending_file(tmp_path, capsys):
    init = tmp_path / "__init__.py"
    init.write_text("class Thing:\n    pass\n", encoding="utf-8")

    assert main([str(init)]) == 1
    assert "disallowed line 1: ClassDef" in capsys.readouterr().out
