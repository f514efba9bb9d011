"""Twin-width machinery: trigraphs, verified contraction sequences, an exact oracle
and synthesizers that build sequences from graph decompositions."""
from .decomp import (BlockCutTree, StrongTreeDecomposition, TreeDecomposition, block_cut_tree,
                     normalize_siblings, validate_std, validate_td)
from .errors import (BoundViolation, DecompositionError, DomainError, InconclusiveError,
                     InternalInvariantError, InvalidContractionError, InvalidPartitionError,
                     InvalidSequenceError, ParseError, PreconditionError, ResourceLimitError,
                     TwinWidthError)
from .oracle import Decision, decide_tww_le, exact_tww, greedy_sequence
from .sequence import ContractionSequence, WidthReport, check_respects, verify_width
from .trigraph import Partition, Trigraph

__version__ = "0.1.0"
