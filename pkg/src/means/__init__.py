from .bounds import bounds, bounds_exact, bounds_heuristic, sample_mean
from .checks import algebra_check, finite_modification_check, linearity_check, shift_check, uniform_limit_check
from .models import CheckReport, CheckStatus, Growth, MeanBounds, RegularityProfile, Schedule, SweepResult, Verdict
from .sweep import refinement_profile, regularity_profile, sweep

__all__ = [
    'CheckReport',
    'CheckStatus',
    'Growth',
    'MeanBounds',
    'RegularityProfile',
    'Schedule',
    'SweepResult',
    'Verdict',
    'algebra_check',
    'bounds',
    'bounds_exact',
    'bounds_heuristic',
    'finite_modification_check',
    'linearity_check',
    'refinement_profile',
    'regularity_profile',
    'sample_mean',
    'shift_check',
    'sweep',
    'uniform_limit_check',
]
