import os
from dataclasses import dataclass, field, fields
from typing import Optional

from dotenv import load_dotenv

ENV_PREFIX = 'ARCPERM_'


def default_jobs() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, 'sched_getaffinity') else (os.cpu_count() or 1)


@dataclass
class RunArgs:
    jobs: int = field(
        default_factory=default_jobs,
        metadata={'help': 'number of worker processes for exhaustive enumeration (default: available cpus)'})
    seed: int = field(
        default=42,
        metadata={'help': 'seed for randomized checks (default: 42)'})
    samples: int = field(
        default=10000,
        metadata={'help': 'number of random instances per randomized check (default: 10000)'})
    max_random_n: int = field(
        default=12,
        metadata={'help': 'largest permutation size drawn by randomized checks (default: 12)'})
    log_level: str = field(
        default='INFO',
        metadata={'help': 'logging level: DEBUG, INFO, WARNING (default: INFO)'})
    progress: bool = field(
        default=True,
        metadata={'help': 'show tqdm progress bars on a tty (default: True)'})

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError(f'jobs should be positive, got {self.jobs}')
        if self.samples < 0:
            raise ValueError(f'samples should be nonnegative, got {self.samples}')
        if not 1 <= self.max_random_n <= 12:
            raise ValueError(f'max_random_n should be in 1..12, got {self.max_random_n}')


def _convert(name: str, raw: str, default) -> object:
    if isinstance(default, bool):
        lowered = raw.strip().lower()
        if lowered in ('1', 'true', 'yes', 'on'):
            return True
        if lowered in ('0', 'false', 'no', 'off'):
            return False
        raise ValueError(f'{ENV_PREFIX}{name.upper()}={raw!r} is not a boolean')
    if isinstance(default, int):
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f'{ENV_PREFIX}{name.upper()}={raw!r} is not an integer') from None
    return raw


def parse_env_args(dotenv_path: Optional[str] = None, **overrides) -> RunArgs:
    """Build RunArgs from ARCPERM_* environment variables (after loading .env), then apply non-None overrides."""
    load_dotenv(dotenv_path)
    defaults = RunArgs()
    values = {}
    for f in fields(RunArgs):
        raw = os.environ.get(f'{ENV_PREFIX}{f.name.upper()}')
        if raw is not None:
            values[f.name] = _convert(f.name, raw, getattr(defaults, f.name))
    values.update({k: v for k, v in overrides.items() if v is not None})
    return RunArgs(**values)
