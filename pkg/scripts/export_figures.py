#!/usr/bin/env python3
"""Export the curve bundles behind every figure as CSV files.

This script writes one CSV per bundle:
- divergence-levels: TVD, Hellinger and KL lower bounds at three levels
- tensorized: Hellinger lower bounds for n = 1, 40, 160 at rho = 0.99
- supporting-lines: hockey-stick lines of the uniform / Beta(1, 1/2) boundary
- refined-upper: raw and refined Chernoff upper bounds at rho = 0.8
- gaussians: lower bounds for two concentric Gaussians

Files are written to the figures/ directory together with metadata.json.

Usage:
    python scripts/export_figures.py [--output-dir DIR] [--grid N] [--figure NAME]
"""

import sys
import json
import hashlib
import argparse
from pathlib import Path
from datetime import datetime
from typing import Dict, Any, Optional, List

from np_region import __version__
from np_region.base import NPRegionError
from np_region.cli import FIGURES, FIGURE_BUILDERS, render
from np_region.config import RunConfig


class FigureExporter:
    """Writer for the figure curve bundles."""

    def __init__(self, output_dir: Optional[Path] = None, grid: int = 201, nodes: int = 4096):
        """Initialize exporter with an output directory.

        Args:
            output_dir: Directory for the CSV files (default: <project>/figures)
            grid: Number of alpha samples per curve
            nodes: Cells when discretizing analytic families
        """
        project_root = Path(__file__).parent.parent
        self.output_dir = output_dir or project_root / "figures"
        self.config = RunConfig(subcommand='figure', grid=grid, nodes=nodes)

    def ensure_dirs(self):
        """Ensure the output directory exists."""
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def export_figure(self, name: str) -> Optional[Dict[str, Any]]:
        """Write one bundle.

        Args:
            name: Bundle name, e.g. 'refined-upper'

        Returns:
            Metadata entry, or None if the bundle failed
        """
        print(f"\n=== Exporting {name} ===")
        destination = self.output_dir / f"{name}.csv"

        args = argparse.Namespace(which=name, values=None, families=None)
        try:
            table = FIGURE_BUILDERS[name](args, self.config)
        except NPRegionError as e:
            print(f"  ERROR: {type(e).__name__}: {e}")
            return None

        text = render(table, 'csv')
        destination.write_text(text, encoding='utf-8')
        print(f"  Saved to: {destination}")
        print(f"  {len(table.rows)} rows, {len(table.columns)} columns")

        return {
            'file': destination.name,
            'columns': table.columns,
            'rows': len(table.rows),
            'sha256': hashlib.sha256(text.encode('utf-8')).hexdigest(),
        }

    def save_metadata(self, figures: Dict[str, Dict[str, Any]]) -> bool:
        """Save metadata about the exported bundles.

        Args:
            figures: Metadata entries keyed by bundle name

        Returns:
            True if the file was written
        """
        metadata = {
            'generator': f"np-region {__version__}",
            'exported_at': datetime.now().isoformat(timespec='seconds'),
            'grid': self.config.grid,
            'nodes': self.config.nodes,
            'figures': figures,
        }
        metadata_file = self.output_dir / "metadata.json"
        try:
            with open(metadata_file, 'w', encoding='utf-8') as f:
                json.dump(metadata, f, indent=2)
            print(f"\nMetadata saved to: {metadata_file}")
            return True
        except OSError as e:
            print(f"\nERROR: Failed to save metadata: {e}")
            return False

    def export_all(self, names: Optional[List[str]] = None) -> bool:
        """Write the selected bundles and the metadata file.

        Args:
            names: Bundle names (default: all)

        Returns:
            True if every bundle was written
        """
        self.ensure_dirs()
        names = names or list(FIGURES.values())

        results: Dict[str, bool] = {}
        entries: Dict[str, Dict[str, Any]] = {}
        for name in names:
            entry = self.export_figure(name)
            results[name] = entry is not None
            if entry is not None:
                entries[name] = entry

        metadata_ok = self.save_metadata(entries)

        print("\n" + "=" * 60)
        print("Export Summary")
        print("=" * 60)
        for name, success in results.items():
            status = "OK" if success else "FAILED"
            print(f"{name:30} {status}")
        print("=" * 60)

        return all(results.values()) and metadata_ok


def main() -> int:
    """Main entry point."""
    parser = argparse.ArgumentParser(
        description='Export the curve bundles behind every figure as CSV files'
    )
    parser.add_argument(
        '--output-dir',
        type=Path,
        help='Directory for the CSV files (default: figures/)'
    )
    parser.add_argument(
        '--grid',
        type=int,
        default=201,
        help='Number of alpha samples per curve (default: 201)'
    )
    parser.add_argument(
        '--nodes',
        type=int,
        default=4096,
        help='Cells when discretizing analytic families (default: 4096)'
    )
    parser.add_argument(
        '--figure',
        choices=list(FIGURES.values()) + ['all'],
        default='all',
        help='Which bundle to export (default: all)'
    )

    args = parser.parse_args()
    if args.grid < 2 or args.nodes < 2:
        parser.error("--grid and --nodes must be at least 2")

    exporter = FigureExporter(output_dir=args.output_dir, grid=args.grid, nodes=args.nodes)
    names = None if args.figure == 'all' else [args.figure]
    success = exporter.export_all(names)

    return 0 if success else 1


if __name__ == '__main__':
    sys.exit(main())
