from lattice.spec import (InvalidEdgeError, LatticeSpec,
                          UnsupportedGeometryError, build_lattice_hamiltonian,
                          read_config, spec_from_config)
from lattice.patterns import (TogglingPattern, check_realizable,
                              pattern_select_edge, pattern_select_H0,
                              select_pattern)
from lattice.bch import bch_first_order, exact_effective, oracle_deviation
from lattice.cleanup import z_echo_cleanup
from lattice.report import norm_scaling, perturbation_norm_report
