from codes.chain import (ChainFormatError, ChainStep, DerivationChain,
                         load_chain, parse_annotation, parse_chain,
                         reverse_ops)
from codes.spec import KINDS, CodeSpec, independent, parse_code
from codes.library import (FIXTURE_ENV, builtin_codes, code_by_name,
                           fixture_dir, known_code, load_code,
                           old_method_chains, read_table)
from codes.verify import (EXACT, MISMATCH, RESOLVED, VerificationReport,
                          replay_chain, verify_chain)
