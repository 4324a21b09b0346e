from simulate.dense import (DTYPE, MAX_QUBITS, OperatorSizeError, apply_op,
                            apply_pauli, basis_state, dense_conjugate,
                            evolve_hamiltonian, hs_norm_dense, ops_unitary,
                            same_up_to_phase, to_matrix, zero_state)
from simulate.spectrum import (GroundSpace, expectation, ground_space,
                               principal_angle, same_span,
                               stabilizer_eigencheck)
from simulate.encoding import (EncodingError, OrderingError, encoder_ops,
                               modified_one_state, prepare_logical)
from simulate.fidelity import fidelity_monte_carlo, predicted_fidelity
