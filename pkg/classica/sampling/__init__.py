from classica.sampling.splitter import Split, TIERS, sample_play, three_tier_split
from classica.sampling.balance import BalanceConfig, BalanceReport, Violation, validate_balance
