from pdoring.radicals.annihilator import AnnihilatorSeries, levitzki_equivalence, upper_left_annihilator_series
from pdoring.radicals.radideals import (DeltaRadideal, RadidealChain, delta_orbit_set, delta_right_ideal,
                                        higher_radideals, in_radideal_Il_delta, nilpotency_index, prime_radical,
                                        radideal_Il, radideal_Il_delta)
from pdoring.radicals.t_nilpotency import (TNilpVerdict, is_left_t_nilpotent, product_graph, right_ideal_set,
                                           right_ideal_tnilpotent)
