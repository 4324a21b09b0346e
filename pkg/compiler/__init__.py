from compiler.sequence import (EXTRACTION_BLOCK, INTERACTION_BLOCK,
                               ROTATION_GROUP, Evolution, PulseSequence,
                               ScheduledStep, Segment)
from compiler.alignment import align_single_qubit
from compiler.build import UnverifiedChainError, compile_code
from compiler.cost import (CostModel, CostReport, baseline_cost, chain_units,
                           cost, improvement, pulse_census)
