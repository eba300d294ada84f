"""
╔══════════════════════════════════════════════════════════════════════════════╗
║              SHORTEST FLOAT PRINTING: Binary → Decimal Toolkit              ║
║══════════════════════════════════════════════════════════════════════════════║
║  Prints binary32/binary64 floats as the shortest decimal that parses back   ║
║  to the same bits, with Dragon2, Dragon4 and a cached-power fast path,      ║
║  three output policies, an exact round-trip oracle and a bench harness.     ║
╚══════════════════════════════════════════════════════════════════════════════╝

Design Principles Applied:
==========================
1. Single Responsibility (SRP):
   - Each module has ONE job (codec decodes, renderer prints, oracle checks)

2. Open/Closed (OCP):
   - New converters register in the DependencyContainer by name
   - New dataset sources plug in behind IDatasetService

3. Liskov Substitution (LSP):
   - Any IShortestConverter works in bench, verify and convert

4. Dependency Inversion (DIP):
   - Pipelines depend on interfaces; DependencyContainer wires implementations
   - Easy to swap implementations for testing

Project Structure:
==================
src/
├── core/                # Pure arithmetic
│   ├── bignum.py        # BigUint, 32-bit limbs
│   ├── ieee_codec.py    # decode / encode / round-trip interval
│   └── exact_decimal.py # exact binary → decimal expansion
├── interfaces/          # Abstract contracts
│   ├── converter.py
│   ├── dataset_service.py
│   └── file_service.py
├── models/              # Data structures
│   ├── ieee.py
│   ├── decimal_fp.py
│   ├── dataset.py
│   ├── report.py
│   └── config.py
├── services/            # Concrete implementations
│   ├── dragon.py        # Dragon2, Dragon4, fast-scaled Dragon4
│   ├── fastpath.py      # cached powers of ten + Dragon4 fallback
│   ├── renderer.py      # CStyle / MinimalLength / ScientificAlways
│   ├── roundtrip_oracle.py
│   ├── dataset_service.py
│   └── local_file_service.py
├── pipeline/            # Orchestration
│   ├── container.py     # Dependency Injection
│   ├── bench_pipeline.py
│   ├── verify_pipeline.py
│   └── cli.py
└── utils/
    ├── logger.py
    ├── parsers.py
    └── prng.py

Usage:
======
python main.py convert 3.14159274101257324 --format f32 --algo dragon4 --policy minimal
python main.py convert 0.00011 --algo fastpath --policy c
python main.py bench --data unit --repeats 100 --csv outputs/unit.csv
python main.py verify --scope "binary32 exhaustive-strata fractions=64"
python main.py verify --scope "binary64 random 10000 seed=1" --workers 4

# Programmatic usage
from src.core.ieee_codec import decode
from src.models.ieee import BINARY32
from src.services.fastpath import shortest
from src.services.renderer import RenderPolicy, render

d = decode(0x40490FDB, BINARY32)
print(render(shortest(d), RenderPolicy.MINIMAL).text)   # 3.1415927
"""

import sys

from src.pipeline.cli import main


if __name__ == "__main__":
    sys.exit(main())
