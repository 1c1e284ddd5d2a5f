"""Formation width, greedy row metrics, and exhaustive extremal-function
search for forbidden subsequence patterns."""

from .errors import (CapHitError, EmptyWordError, FormwidthError,
                     InfeasibleError, InvalidParameterError, ParseError,
                     RegistryError)
from .extremal import (ExQuery, ExResult, KlazarReport,
                       check_klazar_inequality, ex_bruteforce)
from .formations import (Formation, binary_formation, binary_formations,
                         build_alt_avoider, build_es_avoider,
                         build_two_letter_avoider, fl_bounded, fl_upper_bound,
                         formation_contains, fw, fw_witness, gamma, k_swap,
                         sign_patterns)
from .metrics import (BinaryFormationSpec, MetricBounds, binary_closed_forms,
                      l_metric, l_pi, pi_overlap, r_exceeds_l, r_metric)
from .parsing import (decode_one_based, parse_formation, parse_word,
                      render_formation, render_word)
from .registry import (CaseOutcome, TheoremCase, load_manifest, run_case,
                       run_verify)
from .words import (Word, alphabet_size, alt, ascending, ascending_by, avoids,
                    contains, descending, descending_by, is_permutation,
                    is_r_sparse, is_reduced, is_subsequence, normalize,
                    reverse_word, up)

__version__ = "0.1.0"
