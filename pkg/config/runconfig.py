"""
RunConfig: every knob that determines a randomized run.
"""
from dataclasses import asdict, dataclass, replace
from fractions import Fraction
from random import Random
from typing import Any, Dict


@dataclass(frozen=True)
class RunConfig:
    """
    Seed, retry cap, perturbation size and sampling range of a run.

    Two runs with equal configs draw identical random streams and therefore
    produce identical reports.
    """

    seed: int = 0
    retry_cap: int = 32
    perturbation_exponent: int = 20
    shrink_exponent: int = 10
    sample_bits: int = 20
    witness_base: int = 2 ** 16
    generic_trials: int = 5

    @property
    def epsilon(self) -> Fraction:
        return Fraction(1, 2 ** self.perturbation_exponent)

    @property
    def shrink(self) -> Fraction:
        return Fraction(1, 2 ** self.shrink_exponent)

    @property
    def sample_range(self) -> int:
        return 2 ** self.sample_bits

    def rng(self) -> Random:
        return Random(self.seed)

    def with_seed(self, seed: int) -> 'RunConfig':
        return replace(self, seed=seed)

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_settings(cls, **overrides) -> 'RunConfig':
        """
        Build a config from settings.REFRIG, then apply overrides.

        Overrides whose value is None are ignored, so command options can be
        passed straight through.
        """
        from django.conf import settings

        conf = getattr(settings, 'REFRIG', {})
        values = {
            'seed': conf.get('SEED', cls.seed),
            'retry_cap': conf.get('RETRY_CAP', cls.retry_cap),
            'perturbation_exponent': conf.get('PERTURBATION_EXPONENT', cls.perturbation_exponent),
            'shrink_exponent': conf.get('SHRINK_EXPONENT', cls.shrink_exponent),
            'sample_bits': conf.get('SAMPLE_BITS', cls.sample_bits),
            'witness_base': conf.get('WITNESS_BASE', cls.witness_base),
            'generic_trials': conf.get('GENERIC_TRIALS', cls.generic_trials),
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)
