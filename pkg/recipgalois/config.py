__doc__ = """Run configuration shared by the command line and the batch APIs.

Values are layered: built-in defaults, then environment variables, then
explicit keyword arguments (command-line flags).
"""
import os

from .utils import Bunch

#: Environment variables understood by :meth:`Config.from_environ`.
ENVIRONMENT = {
    "workers": "RECIP_WORKERS",
    "seed": "RECIP_SEED",
    "prime_budget": "RECIP_PRIME_BUDGET",
}


class Config(Bunch):
    """Options bundle.

    Parameters
    ----------
    workers : int
        Number of worker processes. ``1`` forces serial execution.
    seed : int
        64-bit seed for every random choice made by a run.
    prime_budget : int
        Number of primes scanned by certificates and fingerprints.
    out_format : str
        ``"json"`` or ``"csv"``.
    out_path : str or None
        Where to write output; ``None`` means stdout.
    shard_size : int
        Census work unit size.
    enumeration_budget : int
        Largest census box allowed.
    transform_budget : int
        Largest exhaustive Fourier transform allowed (number of points).
    factor_trial_bound : int
        Trial division bound before Pollard rho.
    sieve_delta : float or None
        Sieve exponent recorded on SieveParams; None means 1/(4n).
    """
    _fields = (
        "workers",
        "seed",
        "prime_budget",
        "out_format",
        "out_path",
        "shard_size",
        "enumeration_budget",
        "transform_budget",
        "factor_trial_bound",
        "sieve_delta",
    )
    _defaults = {
        "workers": os.cpu_count() or 1,
        "seed": 0,
        "prime_budget": 1000,
        "out_format": "json",
        "out_path": None,
        "shard_size": 100000,
        "enumeration_budget": 10**9,
        "transform_budget": 10**7,
        "factor_trial_bound": 10**6,
        "sieve_delta": None,
    }

    def __init__(self, **kwds):
        super(Config, self).__init__()
        self.update(**kwds)
        self._check()

    @classmethod
    def from_environ(cls, environ=None, **overrides):
        """Build a Config from environment variables, then apply
        ``overrides`` (entries equal to None are ignored)."""
        if environ is None:
            environ = os.environ
        self = cls()
        env = {}
        for key, name in ENVIRONMENT.items():
            if environ.get(name, "") != "":
                env[key] = environ[name]
        self.update(**env)
        self.update(**dict((k, v) for k, v in overrides.items() if v is not None))
        self._check()
        return self

    def _check(self):
        if self.workers < 1:
            raise ValueError("workers must be at least 1.")
        if self.prime_budget < 1:
            raise ValueError("prime_budget must be at least 1.")
        if self.out_format not in ("json", "csv"):
            raise ValueError("out_format must be 'json' or 'csv'.")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits.")
