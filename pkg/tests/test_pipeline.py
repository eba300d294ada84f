import csv
import io

import pytest

from src.core.ieee_codec import decode
from src.models.config import AppConfig, BenchConfig, VerifyConfig
from src.models.ieee import BINARY32, BINARY64
from src.models.report import CSV_COLUMNS, RunReport
from src.pipeline.bench_pipeline import BenchPipeline, PipelineError, format_csv
from src.pipeline.cli import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, main, pin_signed_literal
from src.pipeline.container import DependencyContainer, UnknownAlgorithmError
from src.pipeline.verify_pipeline import (
    ScopeSyntaxError,
    VerifyPipeline,
    VerifyScope,
    boundary_patterns,
    random_patterns,
    strata_patterns,
)
from src.services.dataset_service import DatasetService
from src.services.dragon import Dragon4Converter
from src.services.fastpath import FastPathConverter
from src.services.local_file_service import LocalFileService
from src.services.renderer import RenderPolicy, UnknownPolicyError
from tests.helpers import F32_2150000128, PI_F32


@pytest.fixture
def config(tmp_path):
    return AppConfig(
        bench=BenchConfig(repeats=2, unit_count=40, seed=5),
        verify=VerifyConfig(dragon2_sample=50),
        output_dir=tmp_path,
        quiet=True,
    )


@pytest.fixture
def container(config):
    return DependencyContainer(config)


# === Container ===

def test_container_registers_every_converter(container):
    assert container.algorithm_names == ["dragon2", "dragon4", "dragon4-fast", "fastpath"]
    fast = container.converter("fastpath")
    assert isinstance(fast, FastPathConverter)
    assert fast.cache is container.power_cache
    assert container.converter("fastpath") is fast


def test_container_unknown_algorithm(container):
    with pytest.raises(UnknownAlgorithmError):
        container.converter("grisu3")


def test_container_custom_converter(container):
    custom = Dragon4Converter()
    container.set_converter("reference", custom)
    assert container.converter("reference") is custom
    assert "reference" in container.algorithm_names


def test_container_file_service_follows_config(container, tmp_path):
    assert container.file_service.output_directory == tmp_path
    assert container.dataset_service is container.dataset_service


def test_container_swaps_services(container, tmp_path):
    files = LocalFileService(tmp_path / "elsewhere")
    previous = container.dataset_service
    assert container.set_file_service(files) is container
    assert container.file_service is files
    rebuilt = container.dataset_service
    assert rebuilt is not previous
    assert rebuilt.generate_unit(3, 1, BINARY64).name == "unit-f64"

    datasets = DatasetService(files)
    container.set_dataset_service(datasets)
    assert container.dataset_service is datasets


# === CLI: convert ===

def test_convert_pi_binary32(capsys):
    code = main(["--quiet", "convert", "3.14159274101257324", "--format", "f32"])
    lines = capsys.readouterr().out.splitlines()
    assert code == EXIT_OK
    assert lines == ["3.1415927", f"w=31415927 q=-7 digits=8 bits=0x{PI_F32:08X}"]


@pytest.mark.parametrize(
    "argv, text",
    [
        (["convert", "0"], "0"),
        (["convert", "-0"], "-0"),
        (["convert", "0.00011", "--algo", "fastpath", "--policy", "c"], "0.00011"),
        (["convert", "0.00011", "--algo", "dragon4-fast"], "1.1e-4"),
        (["convert", "2150000000", "--format", "f32", "--policy", "sci"], "2.15E9"),
        (["convert", "2150000000", "--format", "f32", "--policy", "c"], "2.15e+09"),
        (["convert", "4278190080", "--format", "f32", "--policy", "c"], "4278190080"),
        (["convert", "12e9"], "12e9"),
        (["convert", "1e400"], "inf"),
        (["convert", "-inf", "--format", "f32"], "-inf"),
        (["convert", "nan"], "nan"),
        (["convert", "-1.1e-4"], "-1.1e-4"),
        (["convert", "-2.15e9", "--format", "f32"], "-2.15e9"),
        (["convert", "--format", "f32", "-2150000000", "--policy", "sci"], "-2.15E9"),
    ],
)
def test_convert_texts(capsys, argv, text):
    assert main(["--quiet"] + argv) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == text


def test_convert_reports_bits(capsys):
    main(["--quiet", "convert", "2.15e9", "--format", "f32"])
    details = capsys.readouterr().out.splitlines()[1]
    assert details == f"w=215 q=7 digits=3 bits=0x{F32_2150000128:08X}"


def test_convert_special_prints_one_line(capsys):
    main(["--quiet", "convert", "inf"])
    assert capsys.readouterr().out.splitlines() == ["inf"]


def test_convert_malformed_literal(capsys):
    assert main(["--quiet", "convert", "3.14.15"]) == EXIT_VIOLATION


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["convert", "-1.1e-4"], ["convert", "--", "-1.1e-4"]),
        (["--quiet", "convert", "-inf", "--format", "f32"], ["--quiet", "convert", "--format", "f32", "--", "-inf"]),
        (["convert", "--policy", "c", "-2.15E+9"], ["convert", "--policy", "c", "--", "-2.15E+9"]),
        (["convert", "1.5"], ["convert", "1.5"]),
        (["convert", "--", "-1e5"], ["convert", "--", "-1e5"]),
        (["verify", "--scope", "binary32 random 5"], ["verify", "--scope", "binary32 random 5"]),
    ],
)
def test_pin_signed_literal(argv, expected):
    assert pin_signed_literal(argv) == expected


@pytest.mark.parametrize(
    "argv",
    [
        ["convert", "1", "--algo", "grisu3"],
        ["convert", "1", "--policy", "engineering"],
        ["convert", "1", "--format", "f16"],
        ["verify"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv) == EXIT_USAGE


def test_bad_scope_is_usage_error(config):
    assert main(["verify", "--scope", "binary16 random 5"], config=config) == EXIT_USAGE
    assert main(["verify", "--scope", "binary32 everything"], config=config) == EXIT_USAGE


def test_bad_bench_names_are_usage_errors(config):
    assert main(["bench", "--algos", "grisu3"], config=config) == EXIT_USAGE
    assert main(["bench", "--policies", "engineering"], config=config) == EXIT_USAGE


def test_missing_dataset_is_usage_error(config, tmp_path):
    assert main(["bench", "--data", str(tmp_path / "absent.f64le")], config=config) == EXIT_USAGE


# === Bench ===

def test_bench_cli_writes_csv(config, tmp_path, capsys):
    out = tmp_path / "reports" / "unit.csv"
    code = main(
        ["bench", "--count", "20", "--repeats", "2", "--algos", "dragon4,fastpath",
         "--policies", "minimal", "--csv", str(out)],
        config=config,
    )
    assert code == EXIT_OK
    printed = capsys.readouterr().out
    rows = list(csv.DictReader(io.StringIO(printed)))
    assert printed.splitlines()[0] == ",".join(CSV_COLUMNS)
    assert [(r["algorithm"], r["policy"], r["dataset"], r["count"]) for r in rows] == [
        ("dragon4", "minimal", "unit-f64", "20"),
        ("fastpath", "minimal", "unit-f64", "20"),
    ]
    assert rows[0]["fallback_rate"] == ""
    assert 0.0 <= float(rows[1]["fallback_rate"]) <= 1.0
    assert out.read_text(encoding="utf-8") == printed


def test_bench_reports(container):
    reports = BenchPipeline(container=container).run(
        "unit", BINARY64, algorithms=["dragon4", "dragon4-fast"], policies=["sci"]
    )
    assert len(reports) == 2
    for report in reports:
        assert report.count == 40 and report.repeats == 2
        assert report.ns_per_float > 0
        assert report.min_ns_per_float <= report.ns_per_float <= report.max_ns_per_float
        assert report.variability_pct >= 0
        assert report.fallback_rate is None
    iterative, estimated = reports[0].iteration_stats, reports[1].iteration_stats
    assert iterative is not None and iterative.mean >= 0
    assert estimated.mean >= 1 and estimated.max <= 2


def test_bench_length_ordering(container):
    reports = BenchPipeline(container=container).run("unit", BINARY32, algorithms=["fastpath"])
    chars = {r.policy: r.mean_chars for r in reports}
    assert chars["minimal"] <= chars["c"] <= chars["sci"]
    assert len({r.mean_sig_digits for r in reports}) == 1


def test_bench_empty_dataset(container, tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("# no values\n", encoding="utf-8")
    with pytest.raises(PipelineError):
        BenchPipeline(container=container).run(str(path), BINARY64)


def test_bench_rejects_zero_repeats(container):
    ds = container.dataset_service.generate_unit(5, 1, BINARY64)
    with pytest.raises(PipelineError):
        BenchPipeline(container=container).measure(ds, Dragon4Converter(), RenderPolicy.MINIMAL, 0)


def test_bench_unknown_policy(container):
    with pytest.raises(UnknownPolicyError):
        BenchPipeline(container=container).run("unit", BINARY64, policies=["engineering"])


def test_format_csv_blank_fallback():
    report = RunReport("dragon4", "c", "unit-f64", 3, 10.0, 18.0, 16.0, 1, 0.0)
    lines = format_csv([report]).splitlines()
    assert lines[1].endswith(",")
    assert lines[1].startswith("dragon4,c,unit-f64,3,10.0,")


# === Verify ===

@pytest.mark.parametrize(
    "text, kind, count, seed, fractions",
    [
        ("binary64 random 1000000 seed=1", "random", 1000000, 1, 4096),
        ("f32 random 10", "random", 10, 7, 4096),
        ("binary32 exhaustive-strata", "exhaustive-strata", 0, 1, 4096),
        ("binary32 exhaustive-strata fractions=64", "exhaustive-strata", 0, 1, 64),
    ],
)
def test_scope_parse(text, kind, count, seed, fractions):
    scope = VerifyScope.parse(text, seed=7 if "f32" in text else 1)
    assert (scope.kind, scope.count, scope.seed, scope.fractions) == (kind, count, seed, fractions)
    assert VerifyScope.parse(str(scope)) == scope


@pytest.mark.parametrize(
    "text",
    ["binary16 random 5", "binary32 everything", "binary64 random", "binary32 exhaustive-strata fractions=0"],
)
def test_scope_parse_errors(text):
    with pytest.raises(ScopeSyntaxError):
        VerifyScope.parse(text)


def test_strata_patterns_cover_every_exponent():
    patterns = strata_patterns(BINARY32, 4)
    assert len(patterns) == 255 * 4 + 1
    assert set(boundary_patterns(BINARY32)) <= set(patterns)
    assert 0x7F7FFFFF in patterns and 0x00000001 in patterns
    exponents = {p >> 23 for p in patterns}
    assert exponents == set(range(255))


def test_random_patterns_are_finite_and_seeded():
    patterns = random_patterns(BINARY64, 200, seed=3)
    assert patterns == random_patterns(BINARY64, 200, seed=3)
    assert all((p >> 52) & 0x7FF != 0x7FF for p in patterns)
    assert any(p >> 63 for p in patterns)


def test_verify_random_binary32(container):
    summary = VerifyPipeline(container=container).run(VerifyScope.parse("binary32 random 60 seed=2"))
    assert summary.ok, [v.describe(8) for v in summary.violations]
    assert summary.checked == 60
    assert summary.dragon2_checked == 50
    assert summary.scope == "binary32 random 60 seed=2"


def test_verify_random_binary64_with_workers(container):
    summary = VerifyPipeline(container=container).run(VerifyScope.parse("binary64 random 24 seed=9"), workers=3)
    assert summary.ok, [v.describe(16) for v in summary.violations]
    assert summary.checked == 24


def test_verify_strata_with_zero(container):
    summary = VerifyPipeline(container=container).run(
        VerifyScope.parse("binary32 exhaustive-strata fractions=1")
    )
    assert summary.ok, [v.describe(8) for v in summary.violations]
    assert summary.checked == len(strata_patterns(BINARY32, 1))


def test_verify_zero_values(container):
    summary = VerifyPipeline(container=container).run(VerifyScope.parse("binary64 random 0"))
    assert summary.ok and summary.checked == 0
    assert summary.fallback_rate == 0.0 and summary.dragon2_failure_rate == 0.0


def test_check_value_passes_for_pi(container):
    pipeline = VerifyPipeline(container=container)
    assert pipeline.check_value(decode(PI_F32, BINARY32), PI_F32) == []


def test_verify_cli_exit_code(config, capsys):
    assert main(["verify", "--scope", "binary32 random 5", "--seed", "4"], config=config) == EXIT_OK
    assert capsys.readouterr().out.startswith("binary32 random 5 seed=4: checked=5 violations=0")


def test_verify_rejects_zero_workers(container):
    with pytest.raises(PipelineError):
        VerifyPipeline(container=container).check([PI_F32], BINARY32, workers=0)



def test_config_with_bench():
    config = AppConfig.with_bench(repeats=3, seed=2)
    assert (config.bench.repeats, config.bench.seed) == (3, 2)
    assert config.bench.algorithms == ("dragon4", "dragon4-fast", "fastpath")
    assert BenchPipeline(config=config).container.config is config


# === Slow acceptance checks ===

@pytest.mark.slow
def test_fastpath_beats_dragon4(container):
    container.config.bench.unit_count = 2000
    container.config.bench.repeats = 3
    reports = BenchPipeline(container=container).run(
        "unit", BINARY64, algorithms=["dragon4", "fastpath"], policies=["minimal"]
    )
    dragon, fast = reports
    assert dragon.ns_per_float >= 3 * fast.ns_per_float


@pytest.mark.slow
def test_dragon2_is_inexact():
    failures = 0
    for bits in random_patterns(BINARY64, 100_000, seed=1):
        d = decode(bits, BINARY64)
        if not d.is_zero and not VerifyPipeline._dragon2_round_trips(d, bits):
            failures += 1
    assert failures > 0

@pytest.mark.slow
@pytest.mark.parametrize("fmt, minimal, scientific", [(BINARY64, 18.268, 20.16), (BINARY32, 9.626, 11.515)])
def test_unit_dataset_mean_lengths(container, fmt, minimal, scientific):
    container.config.bench.unit_count = 100_000
    container.config.bench.repeats = 1
    reports = BenchPipeline(container=container).run("unit", fmt, algorithms=["fastpath"])
    chars = {r.policy: r.mean_chars for r in reports}
    assert chars["minimal"] == pytest.approx(minimal, abs=0.05)
    assert chars["sci"] == pytest.approx(scientific, abs=0.05)
    assert chars["minimal"] <= chars["c"] <= chars["sci"]
