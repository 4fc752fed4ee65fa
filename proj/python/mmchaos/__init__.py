"""Set-valued iteration and chaos probes for finite families of maps.

Thin wrapper over the C++ extension module. The extension is importable
either as a submodule of an installed package or as a top-level module when
running against a plain CMake build directory on PYTHONPATH.
"""

try:
    from mmchaos._mmchaos import (
        ChaosError,
        block_count,
        build_word,
        fixtures,
        hausdorff,
        iterate,
        run,
    )
except ImportError:
    from _mmchaos import (
        ChaosError,
        block_count,
        build_word,
        fixtures,
        hausdorff,
        iterate,
        run,
    )

__all__ = [
    "ChaosError",
    "block_count",
    "build_word",
    "fixtures",
    "hausdorff",
    "iterate",
    "run",
]
