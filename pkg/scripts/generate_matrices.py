"""
CLI script to generate seeded random PSD matrix files.

Usage:
    uv run ka-gen-matrices --count=4 --dim=3 --output=fixtures/matrices
    uv run ka-gen-matrices --count=2 --dim=4 --rank=2 --prefix=singular
"""

import argparse
from pathlib import Path

from src.generators import PsdGenerator
from src.matcore import write_matrix


def generate_matrices(
    count: int,
    dim: int,
    output_dir: Path,
    seed: int = 42,
    rank: int | None = None,
    prefix: str = "matrix",
) -> list[Path]:
    """Write ``count`` matrices in the ``dim n`` format; full rank unless ``rank`` is given."""
    gen = PsdGenerator(seed=seed)
    paths = []
    for i in range(count):
        matrix = gen.invertible(dim) if rank is None else gen.generate(dim, rank)
        paths.append(write_matrix(matrix, output_dir / f"{prefix}-{i:03d}.txt"))
    return paths


def main():
    parser = argparse.ArgumentParser(description="Generate random PSD matrix files")
    parser.add_argument("--count", type=int, default=2, help="Number of matrices to generate")
    parser.add_argument("--dim", type=int, default=3, help="Matrix dimension")
    parser.add_argument("--rank", type=int, default=None, help="Rank (default: invertible)")
    parser.add_argument("--seed", type=int, default=42, help="Random seed")
    parser.add_argument("--prefix", type=str, default="matrix", help="File name prefix")
    parser.add_argument(
        "--output",
        type=str,
        default="fixtures/matrices",
        help="Output directory",
    )

    args = parser.parse_args()

    print(f"Generating {args.count} matrices of dimension {args.dim}...")
    paths = generate_matrices(
        args.count,
        args.dim,
        Path(args.output),
        seed=args.seed,
        rank=args.rank,
        prefix=args.prefix,
    )
    for path in paths:
        print(f"  [OK] {path}")
    print(f"Saved {len(paths)} matrices to {args.output}")


if __name__ == "__main__":
    main()
