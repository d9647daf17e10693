"""Fast algebraic degree of Boolean functions from packed truth tables."""
from .anf import (ByteVector, anft_bitwise, anft_bitwise_inplace, anft_bytewise,
                  anft_bytewise_inplace, mobius_coefficient_oracle, pack, unpack)
from .bitpack import PackedVector, bit_get, from_text, parity, render_text, serial_number, weight
from .cube import (MaskSet, WloSequence, binomial, cached_masks, cached_wlo, generate_masks,
                   generate_masks_direct, generate_wlo, layer_slice)
from .degree import (BOTTOM, Algorithm, DegreeResult, degree_es, degree_pipeline,
                     degree_wlo_bitprobe, degree_wlo_bitwise, degree_wlo_bytewise, pipeline_batch)
from .distribution import (DistributionRow, EmpiricalHistogram, count_exact, distribution_table,
                           empirical_distribution, probability)
from .errors import ConsistencyError, DomainError, FormatError, ParseError
from .ingest import FunctionStream, generate_random, read_functions

__version__ = "0.1.0"
