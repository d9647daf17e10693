"""Timing comparison of the four TT -> degree pipelines on one function stream."""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

import numpy as np

from .anf import anft_bytes_inplace, anft_words_inplace
from .bitpack import unpack_bits
from .degree import Algorithm, search_batch
from .errors import ConsistencyError
from .ingest import FunctionStream

PIPELINES = (
    (Algorithm.ES, "byte-wise ANFT & ES"),
    (Algorithm.WLO_BYTE, "byte-wise ANFT & WLO"),
    (Algorithm.WLO_BIT_MASK, "bitwise ANFT & WLO masks"),
    (Algorithm.WLO_BIT_PROBE, "bitwise ANFT & WLO bit probes"),
)


@dataclass
class PipelineTiming:
    algorithm: str
    label: str
    seconds: list[float] = field(default_factory=list)
    steps: int = 0
    word_ops: int = 0

    @property
    def mean_seconds(self) -> float:
        return sum(self.seconds) / len(self.seconds) if self.seconds else 0.0


@dataclass
class BenchReport:
    n: int
    function_count: int
    repetitions: int
    timings: list[PipelineTiming]

    def timing(self, algorithm: Algorithm) -> PipelineTiming:
        for t in self.timings:
            if t.algorithm == Algorithm(algorithm).value:
                return t
        raise KeyError(algorithm)

    def functions_per_second(self, algorithm: Algorithm) -> float:
        mean = self.timing(algorithm).mean_seconds
        return self.function_count / mean if mean > 0 else float("inf")

    def speedup(self, fast: Algorithm, slow: Algorithm = Algorithm.ES) -> float:
        return self.timing(slow).mean_seconds / self.timing(fast).mean_seconds

    def to_dict(self) -> dict:
        out = asdict(self)
        for t, d in zip(self.timings, out["timings"]):
            d["mean_seconds"] = t.mean_seconds
            d["functions_per_second"] = self.functions_per_second(Algorithm(t.algorithm))
        return out

    def render(self) -> str:
        lines = [f"n={self.n} functions={self.function_count} repetitions={self.repetitions}"]
        for t in self.timings:
            reps = " ".join(f"{s:.4f}" for s in t.seconds)
            ratio = self.speedup(Algorithm(t.algorithm))
            lines.append(
                f"{t.label:<32} mean {t.mean_seconds:.4f}s  [{reps}]  "
                f"{self.functions_per_second(Algorithm(t.algorithm)):.0f} fn/s  "
                f"steps {t.steps}  x{ratio:.1f} vs ES")
        return "\n".join(lines)


def run_bench(stream: FunctionStream, repetitions: int = 3, batch_size: int = 4096) -> BenchReport:
    """Time each pipeline over the whole stream ``repetitions`` times.

    Reading the stream, unpacking to bytes and copying inputs are outside the
    timed regions. Degrees of all pipelines are compared function by function
    (and across repetitions) before anything is reported.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    n = stream.n
    timings = [PipelineTiming(a.value, label) for a, label in PIPELINES]
    reference = None
    for _ in range(repetitions):
        elapsed = [0.0] * len(PIPELINES)
        degrees: list[list[np.ndarray]] = [[] for _ in PIPELINES]
        for block in stream.batches(batch_size):
            unpacked = unpack_bits(block, n)
            for j, (alg, _) in enumerate(PIPELINES):
                data = unpacked.copy() if alg.bytewise else block.copy()
                t0 = time.perf_counter()
                if alg.bytewise:
                    anft_bytes_inplace(data, n)
                else:
                    anft_words_inplace(data, n)
                res = search_batch(data, n, alg)
                elapsed[j] += time.perf_counter() - t0
                degrees[j].append(res.degrees)
                if reference is None:
                    timings[j].steps += int(res.steps.sum())
                    if res.word_ops is not None:
                        timings[j].word_ops += int(res.word_ops.sum())
        merged = [np.concatenate(d) if d else np.zeros(0, np.int16) for d in degrees]
        for j in range(1, len(PIPELINES)):
            if not np.array_equal(merged[0], merged[j]):
                bad = int(np.flatnonzero(merged[0] != merged[j])[0])
                raise ConsistencyError(
                    f"{PIPELINES[j][1]} disagrees with {PIPELINES[0][1]} on function {bad}")
        if reference is None:
            reference = merged[0]
        elif not np.array_equal(np.sort(reference), np.sort(merged[0])):
            raise ConsistencyError("degree multiset changed between repetitions")
        for j, t in enumerate(timings):
            t.seconds.append(elapsed[j])
    return BenchReport(n=n, function_count=len(stream), repetitions=repetitions, timings=timings)
