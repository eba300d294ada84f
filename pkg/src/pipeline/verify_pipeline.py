"""
Verify Pipeline
===============
Checks every exact converter against the round-trip oracle.
Single Responsibility: Orchestrates oracle checks and merges their counts.

Per value: round-trip under all policies, minimality, correct rounding,
fast path and fast-scaled Dragon4 equal to Dragon4, and the shortest
string length. Dragon2's round-trip failure rate is measured separately.
"""

import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from src.core.exact_decimal import to_exact_decimal
from src.core.ieee_codec import decode
from src.models.config import AppConfig
from src.models.decimal_fp import DecimalFP
from src.models.ieee import DecodedFloat, FloatFormat
from src.models.report import VerifySummary, Violation
from src.pipeline.bench_pipeline import PipelineError
from src.pipeline.container import DependencyContainer
from src.services.dragon import dragon2_decimal, dragon4, dragon4_fast_scaled
from src.services.fastpath import fast_shortest, shortest
from src.services.renderer import RenderPolicy, render, to_shortest_string
from src.services.roundtrip_oracle import (
    closest_minimal_candidate,
    minimal_digit_count,
    parse_exact,
    shortest_string_oracle,
)
from src.utils.logger import Logger
from src.utils.prng import Xoshiro256StarStar

_SCOPE = re.compile(
    r"^\s*(?P<format>\S+)\s+(?:"
    r"random\s+(?P<count>\d+)(?:\s+seed=(?P<seed>\d+))?"
    r"|exhaustive-strata(?:\s+fractions=(?P<fractions>\d+))?"
    r")\s*$"
)


class ScopeSyntaxError(ValueError):
    """Raised when a --scope string does not match the scope grammar."""
    pass


@dataclass(frozen=True)
class VerifyScope:
    """Inputs to verify: seeded random patterns or the exponent strata."""
    format: FloatFormat
    kind: str
    count: int = 0
    seed: int = 1
    fractions: int = 4096

    @classmethod
    def parse(cls, text: str, seed: int = 1, fractions: int = 4096) -> "VerifyScope":
        """
        Parse "<format> random N [seed=S]" or "<format> exhaustive-strata [fractions=F]".

        Raises:
            ScopeSyntaxError: If text does not match
        """
        match = _SCOPE.match(text)
        if not match:
            raise ScopeSyntaxError(
                f"Bad scope {text!r}: expected '<format> random N [seed=S]' "
                f"or '<format> exhaustive-strata [fractions=F]'"
            )
        try:
            fmt = FloatFormat.from_name(match.group("format"))
        except ValueError as e:
            raise ScopeSyntaxError(str(e)) from e

        if match.group("count") is not None:
            return cls(
                format=fmt,
                kind="random",
                count=int(match.group("count")),
                seed=int(match.group("seed") or seed),
            )
        requested = int(match.group("fractions") or fractions)
        if requested < 1:
            raise ScopeSyntaxError("fractions must be at least 1")
        return cls(format=fmt, kind="exhaustive-strata", fractions=requested)

    def __str__(self) -> str:
        if self.kind == "random":
            return f"{self.format} random {self.count} seed={self.seed}"
        return f"{self.format} exhaustive-strata fractions={self.fractions}"


def boundary_patterns(fmt: FloatFormat) -> list[int]:
    """Smallest subnormal, largest subnormal, smallest normal, largest finite."""
    largest_finite = (fmt.max_biased_exponent << fmt.stored_significand_bits) | fmt.fraction_mask
    return [1, fmt.fraction_mask, fmt.hidden_bit, largest_finite]


def strata_patterns(fmt: FloatFormat, fractions: int) -> list[int]:
    """
    Every biased exponent (subnormal row included) times `fractions` evenly
    spaced fraction fields, plus the boundary patterns.
    """
    steps = np.unique(
        np.linspace(0, fmt.fraction_mask, num=min(fractions, fmt.hidden_bit), dtype=np.float64)
        .round()
        .astype(np.uint64)
    )
    patterns = {
        (biased << fmt.stored_significand_bits) | int(fraction)
        for biased in range(fmt.max_biased_exponent + 1)
        for fraction in steps
    }
    patterns.update(boundary_patterns(fmt))
    return sorted(patterns)


def random_patterns(fmt: FloatFormat, count: int, seed: int) -> list[int]:
    """count uniformly drawn finite bit patterns of either sign."""
    rng = Xoshiro256StarStar(seed)
    mask = (1 << fmt.total_bits) - 1
    exponent_shift = fmt.stored_significand_bits
    patterns: list[int] = []
    while len(patterns) < count:
        bits = rng.next_u64() & mask
        if (bits >> exponent_shift) & fmt.exponent_mask != fmt.exponent_mask:
            patterns.append(bits)
    return patterns


def _same(a: DecimalFP, b: DecimalFP) -> bool:
    return a.sign is b.sign and a.significand == b.significand and a.q == b.q


class VerifyPipeline:
    """
    Oracle-check orchestrator.

    Usage:
        summary = VerifyPipeline().run(VerifyScope.parse("binary32 random 1000"))
    """

    def __init__(
        self,
        config: Optional[AppConfig] = None,
        container: Optional[DependencyContainer] = None
    ):
        if container:
            self._container = container
        else:
            self._container = DependencyContainer(config or AppConfig.default())
        self._logger = Logger(prefix="Verify")

    def run(self, scope: VerifyScope, workers: Optional[int] = None) -> VerifySummary:
        """
        Check every value in scope; violations are logged with their bit pattern.

        Args:
            scope: Inputs to check
            workers: Thread count (config default if not provided)
        """
        settings = self._container.config.verify
        if scope.kind == "random":
            patterns = random_patterns(scope.format, scope.count, scope.seed)
        else:
            patterns = strata_patterns(scope.format, scope.fractions)

        self._logger.verify(f"Checking {len(patterns)} value(s): {scope}")
        summary = self.check(patterns, scope.format, workers or settings.workers)
        summary.scope = str(scope)

        hex_width = scope.format.total_bits // 4
        for violation in summary.violations:
            self._logger.error(violation.describe(hex_width))

        self._logger.data(
            f"fastpath fallback rate {summary.fallback_rate:.6f}, "
            f"dragon2 failure rate {summary.dragon2_failure_rate:.6f} "
            f"({summary.dragon2_failures}/{summary.dragon2_checked})"
        )
        if summary.ok:
            self._logger.success(f"{summary.checked} value(s), 0 violations")
        else:
            self._logger.error(f"{summary.checked} value(s), {len(summary.violations)} violation(s)")
        return summary

    def check(self, patterns: Sequence[int], fmt: FloatFormat, workers: int = 1) -> VerifySummary:
        """Check patterns, sharded across worker threads, and merge the counts."""
        if workers < 1:
            raise PipelineError(f"workers must be at least 1, got {workers}")

        dragon2_budget = self._container.config.verify.dragon2_sample
        chunk = max(1, -(-len(patterns) // workers))
        shards = [
            (patterns[i:i + chunk], max(0, min(chunk, dragon2_budget - i)))
            for i in range(0, len(patterns), chunk)
        ]

        summary = VerifySummary(scope="")
        if workers == 1 or len(shards) <= 1:
            for shard, budget in shards:
                summary.merge(self._check_shard(shard, fmt, budget))
            return summary

        with ThreadPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(lambda job: self._check_shard(job[0], fmt, job[1]), shards):
                summary.merge(part)
        return summary

    def _check_shard(self, patterns: Sequence[int], fmt: FloatFormat, dragon2_budget: int) -> VerifySummary:
        summary = VerifySummary(scope="")
        for index, bits in enumerate(patterns):
            summary.checked += 1
            d = decode(bits, fmt)
            for check, detail in self.check_value(d, bits):
                summary.violations.append(Violation(check=check, bits=bits, detail=detail))
            if d.is_zero:
                continue
            if not fast_shortest(d, self._container.power_cache).certain:
                summary.fastpath_uncertain += 1
            if index < dragon2_budget:
                summary.dragon2_checked += 1
                if not self._dragon2_round_trips(d, bits):
                    summary.dragon2_failures += 1
        return summary

    def check_value(self, d: DecodedFloat, bits: int) -> list[tuple[str, str]]:
        """
        All oracle checks for one finite value.

        Returns:
            (check name, detail) for every failed check
        """
        fmt = d.format
        failures: list[tuple[str, str]] = []

        if d.is_zero:
            for policy in RenderPolicy:
                text = render(DecimalFP.zero(d.sign), policy).text
                if parse_exact(text, fmt) != bits:
                    failures.append(("round-trip", f"{policy.value} {text!r}"))
            return failures

        reference = dragon4(d)
        outputs = {
            "dragon4": reference,
            "dragon4-fast": dragon4_fast_scaled(d),
            "fastpath": shortest(d, self._container.power_cache),
        }
        for name in ("dragon4-fast", "fastpath"):
            if not _same(outputs[name], reference):
                failures.append((f"{name}-mismatch", f"{outputs[name]} != dragon4 {reference}"))

        exact = to_exact_decimal(d)
        texts = {
            (policy, render(dec, policy, exact=exact).text)
            for dec in outputs.values()
            for policy in RenderPolicy
        }
        for policy, text in sorted(texts, key=lambda item: (item[0].value, item[1])):
            parsed = parse_exact(text, fmt)
            if parsed != bits:
                failures.append(("round-trip", f"{policy.value} {text!r} -> 0x{parsed:X}"))

        minimal = minimal_digit_count(d)
        digits = len(str(reference.significand))
        if digits != minimal:
            failures.append(("minimality", f"dragon4 {reference} has {digits} digits, minimum is {minimal}"))
        else:
            closest = closest_minimal_candidate(d, minimal)
            if not _same(closest, reference):
                failures.append(("rounding", f"dragon4 {reference}, closest is {closest}"))

        printed = to_shortest_string(d)
        best = shortest_string_oracle(d)
        if printed.length != best.length:
            failures.append(("shortest-string", f"{printed.text!r} vs oracle {best.text!r}"))
        return failures

    @staticmethod
    def _dragon2_round_trips(d: DecodedFloat, bits: int) -> bool:
        try:
            text = render(dragon2_decimal(d), RenderPolicy.MINIMAL).text
            return parse_exact(text, d.format) == bits
        except (ValueError, ArithmeticError, OverflowError):
            return False
