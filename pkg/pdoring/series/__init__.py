from pdoring.series.binomial import binom_int
from pdoring.series.commutation import ConjugationResult, commute_pow, conjugation_check, x_power_times
from pdoring.series.laurent_series import DEFAULT_POLICY, UNKNOWN, PrecisionPolicy, Series, commute_terms
