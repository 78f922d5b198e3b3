"""Judgment-matrix thermodynamics: commissions, Ising profit, Gibbs ensembles,
clairvoyant strategies and Fisher information.

All criterion and step indices are 0-based.
"""

from ._core import (
    EnsembleObservables,
    EnumerationCapExceeded,
    brute_force_partition,
    clairvoyant,
    commission_from_bid_ask,
    cost_matrix,
    cost_of_information,
    decompose,
    discrete_fisher,
    gibbs_weight,
    iverson,
    log_returns,
    max_profit,
    observables,
    partition_function,
    priority_vector,
    profit,
    shannon_entropy,
    spin_profit,
    spins,
    strategy_fisher,
    temperature_scan,
    transfer_matrix,
    transitivity_deviation,
    tropical_product,
    value_basket,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
