"""Products of chains: rank levels, the middle-level width, the binomial
width bound, and independent maximum-antichain oracles.
"""

from ._chains import ChainProduct, chain_product_bound, rank_level_counts, uniform_chain_bound, width_rank
from ._oracle import MAX_ORACLE_ELEMENTS, MAX_ORACLE_PAIRS, Poset, width_oracle

__all__ = (
    "MAX_ORACLE_ELEMENTS",
    "MAX_ORACLE_PAIRS",
    "ChainProduct",
    "Poset",
    "chain_product_bound",
    "rank_level_counts",
    "uniform_chain_bound",
    "width_oracle",
    "width_rank",
)
