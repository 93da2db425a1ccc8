from pdoring.verify.catalog import COUNTEREXAMPLE_RUNS, FIXTURE_BUILDERS, Fixture, FixtureCatalog, build_fixture
from pdoring.verify.report import Failure, VerificationReport, format_reports
from pdoring.verify.runner import FIXTURE_SUITES, SUITE_NAMES, run_all
from pdoring.verify.suites import (suite_counterexample, suite_delta_compat, suite_delta_orbit,
                                   suite_higher_and_prime, suite_ideal_lifts, suite_levitzki, suite_main_theorem,
                                   suite_radical_collapse, suite_series_laws, suite_series_tnilp)
