from pathlib import Path
from typing import List, Union


def list_pngs(directory: Union[str, Path]) -> List[Path]:
    """PNG files directly inside ``directory``, sorted by name."""
    directory = Path(directory)
    if not directory.is_dir():
        return []
    return sorted(p for p in directory.iterdir() if p.is_file() and p.suffix.lower() == ".png")


def container_path(output_dir: Path, image_path: Path, label: str) -> Path:
    """Where the container for (image, predictor) goes: ``<stem>.<label>.gpx``."""
    return output_dir / f"{image_path.stem}.{label}.gpx"


def format_kv(**pairs) -> str:
    """Machine-parseable ``key=value`` line; floats get 6 decimals."""
    parts = []
    for key, value in pairs.items():
        if isinstance(value, float):
            value = f"{value:.6f}"
        parts.append(f"{key}={value}")
    return " ".join(parts)
