# utils.py
import math
import threading
from concurrent.futures import ThreadPoolExecutor, as_completed
from fractions import Fraction
from typing import Callable, Iterator, List, Optional, Sequence, TypedDict, TypeVar

from config import Config
from errors import InvalidRootSystemError
from logger import log_failure, log_progress
from models import InstanceResultModel, SuiteResultModel
from services.rootsys import RootSystem, build

T = TypeVar("T")
R = TypeVar("R")


def frac_str(x) -> str:
    """Exact "p/q" string in lowest terms; integers print as "p"."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def weight_str(chi: Sequence) -> str:
    return "(" + ", ".join(frac_str(x) for x in chi) + ")"


def lcm_of_denominators(values: Sequence) -> int:
    k = 1
    for x in values:
        k = math.lcm(k, Fraction(x).denominator)
    return k


def fan_out(
    fn: Callable[[T], R],
    items: Sequence[T],
    workers: int = 1,
    label: Optional[str] = None,
) -> List[R]:
    """Map fn over items, optionally on a thread pool; results keep the input order."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    results: List[Optional[R]] = [None] * len(items)
    completed = 0
    lock = threading.Lock()
    step = max(1, len(items) // 10)
    with ThreadPoolExecutor(max_workers=min(workers, len(items))) as ex:
        future_map = {ex.submit(fn, item): i for i, item in enumerate(items)}
        for fut in as_completed(future_map):
            results[future_map[fut]] = fut.result()
            with lock:
                completed += 1
                if label and completed % step == 0:
                    log_progress(f"{label}: {completed}/{len(items)}", "workers")
    return results  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# verify graph plumbing
# ---------------------------------------------------------------------------


class VerifyState(TypedDict):
    config: Config
    max_rank: int
    pending: List[str]
    results: List[SuiteResultModel]


def iter_systems(kinds: str, max_rank: int, min_rank: int = 1) -> Iterator[RootSystem]:
    """Every valid (kind, rank) with min_rank <= rank <= max_rank, kind by kind."""
    for kind in kinds:
        for rank in range(min_rank, max_rank + 1):
            try:
                yield build(kind, rank)
            except InvalidRootSystemError:
                continue


def instance(rs: RootSystem, passed: bool, detail: str = "", r: Optional[int] = None, element=None) -> InstanceResultModel:
    return InstanceResultModel(
        kind=rs.kind,
        rank=rs.rank,
        r=r,
        element=list(element) if element is not None else None,
        passed=passed,
        detail=detail,
    )


def finish_suite(suite: str, instances: List[InstanceResultModel]) -> SuiteResultModel:
    failed = [i for i in instances if not i.passed]
    for i in failed:
        where = f"{i.kind}{i.rank}" + (f" r={i.r}" if i.r is not None else "")
        word = "".join(f"s{k}" for k in i.element) if i.element else ""
        log_failure(f"{where} {word} {i.detail}".strip(), suite.replace("-", "_"))
    log_progress(f"{len(instances) - len(failed)}/{len(instances)} instances passed", suite.replace("-", "_"))
    return SuiteResultModel(suite=suite, passed=not failed, instances=instances)
