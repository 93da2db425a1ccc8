import traceback
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from typing import Callable, List, Optional, Sequence, Tuple

from tqdm import tqdm

from pdoring.config import DEFAULT_CONFIG, EngineConfig
from pdoring.verify import suites
from pdoring.verify.catalog import COUNTEREXAMPLE_RUNS, Fixture, FixtureCatalog
from pdoring.verify.report import VerificationReport

FIXTURE_SUITES = ("delta_compat", "ideal_lifts", "delta_orbit", "series_tnilp", "main_theorem",
                  "higher_and_prime", "series_laws", "levitzki", "radical_collapse")
SUITE_NAMES = FIXTURE_SUITES + ("counterexample",)

Task = Tuple[str, str, Callable[[], VerificationReport]]


def fixture_tasks(suite: str, fixture: Fixture, seed: int, trials: int, precision: int,
                  config: EngineConfig) -> List[Task]:
    """The (suite, descriptor, thunk) triples one suite contributes for one fixture."""
    if suite in ("ideal_lifts", "series_tnilp"):
        run = suites.suite_ideal_lifts if suite == "ideal_lifts" else suites.suite_series_tnilp
        return [(suite, suites.ideal_label(fixture, ideal),
                 partial(run, fixture, ideal, seed=seed, trials=trials, precision=precision))
                for ideal in suites.ideals_for_lifts(fixture)]
    thunks = {
        "delta_compat": partial(suites.suite_delta_compat, fixture, seed=seed),
        "delta_orbit": partial(suites.suite_delta_orbit, fixture, seed=seed),
        "main_theorem": partial(suites.suite_main_theorem, fixture, seed=seed, trials=trials, precision=precision,
                                witness_length=config.witness_length),
        "higher_and_prime": partial(suites.suite_higher_and_prime, fixture, seed=seed, trials=trials,
                                    precision=precision, config=config),
        "series_laws": partial(suites.suite_series_laws, fixture, seed=seed, trials=trials, precision=precision),
        "levitzki": partial(suites.suite_levitzki, fixture, seed=seed, config=config),
        "radical_collapse": partial(suites.suite_radical_collapse, fixture, seed=seed, config=config),
    }
    return [(suite, fixture.name, thunks[suite])]


def _guarded(task: Task, seed: int) -> VerificationReport:
    suite, descriptor, thunk = task
    try:
        return thunk()
    except Exception:
        tqdm.write(f"{suite} on {descriptor} crashed")
        return VerificationReport(suite, descriptor, seed).error(traceback.format_exc())


def run_all(catalog: Optional[FixtureCatalog] = None, seed: Optional[int] = None, precision: Optional[int] = None,
            trials: Optional[int] = None, workers: int = 1, show_progress: bool = False,
            suite_names: Sequence[str] = SUITE_NAMES, counterexamples: Optional[Sequence[Tuple[int, int, int]]] = None,
            config: EngineConfig = DEFAULT_CONFIG) -> List[VerificationReport]:
    """
    Run the selected suites over every fixture and collect the reports.

    Never raises for a failing or crashing suite: the crash becomes a report
    with status ``error``. Report order depends only on the catalog and the
    suite selection, so results are identical for any number of workers.

    :param catalog: fixtures to verify; None means the default catalog together
        with the default counterexample runs
    :param counterexamples: (m, n, k_max) runs of the counterexample suite
    """
    seed = config.seed if seed is None else seed
    precision = config.floor_drop if precision is None else precision
    trials = config.trials if trials is None else trials
    if catalog is None:
        catalog = FixtureCatalog.default(config)
        if counterexamples is None:
            counterexamples = COUNTEREXAMPLE_RUNS
    counterexamples = counterexamples or ()

    tasks: List[Task] = []
    for suite in suite_names:
        if suite == "counterexample":
            tasks += [(suite, f"m={m} n={n} k_max={k}",
                       partial(suites.suite_counterexample, m, n, k, seed=seed, config=config))
                      for m, n, k in counterexamples]
            continue
        for fixture in catalog:
            tasks += fixture_tasks(suite, fixture, seed, trials, precision, config)

    with tqdm(total=len(tasks), desc="verify", disable=not show_progress) as progress:
        def run(task):
            report = _guarded(task, seed)
            progress.update(1)
            return report

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                return list(pool.map(run, tasks))
        return [run(task) for task in tasks]
