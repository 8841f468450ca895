from .instances import Instance, build_instance, generate_instances, instance_rng
from .suite import REGISTRY, Failure, VerificationSuite, VerificationSummary

__all__ = [
    'REGISTRY',
    'Failure',
    'Instance',
    'VerificationSuite',
    'VerificationSummary',
    'build_instance',
    'generate_instances',
    'instance_rng',
]
