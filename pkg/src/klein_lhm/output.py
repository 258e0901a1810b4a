"""Plain-text and PPM writers for grids, tables and run summaries.

Floats are written in Python's shortest round-trip form, so every file
reads back to the exact binary64 values that produced it.
"""

from __future__ import annotations

import csv
import math

import numpy as np


def format_value(value):
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def parse_value(text):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def write_table(path, header, rows):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(v) for v in row])


def read_table(path):
    """Return ``(header, rows)`` with numeric cells parsed."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = [tuple(parse_value(cell) for cell in row) for row in reader]
    return header, rows


def write_density_csv(path, grid):
    """``x,z,value`` rows, x outer and z fastest."""
    with open(path, "w") as fh:
        fh.write("x,z,value\n")
        zs = [repr(float(z)) for z in grid.z]
        for i, x in enumerate(grid.x):
            xs = repr(float(x))
            col = grid.density[i]
            fh.writelines(f"{xs},{zs[k]},{float(col[k])!r}\n" for k in range(len(zs)))


def read_density_csv(path):
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    return data[:, 0], data[:, 1], data[:, 2]


def grayscale_levels(density):
    """Map values to 0..255 by ``floor(255*(v - vmin)/(vmax - vmin) + 0.5)``."""
    vmin, vmax = float(np.min(density)), float(np.max(density))
    if vmax == vmin:
        return np.zeros(np.shape(density), dtype=np.uint8), vmin, vmax
    levels = np.floor(255 * (density - vmin) / (vmax - vmin) + 0.5)
    return levels.astype(np.uint8), vmin, vmax


def write_ppm(path, grid):
    """Binary P6 image of ``grid.density`` with +z up and +x right.

    Returns the ``(vmin, vmax)`` used for scaling.
    """
    levels, vmin, vmax = grayscale_levels(grid.density)
    image = levels.T[::-1]  # rows: z descending; columns: x ascending
    rgb = np.repeat(image[:, :, None], 3, axis=2)
    height, width = image.shape
    with open(path, "wb") as fh:
        fh.write(f"P6\n{width} {height}\n255\n".encode("ascii"))
        fh.write(np.ascontiguousarray(rgb).tobytes())
    return vmin, vmax


def read_ppm(path):
    """Return the grayscale channel of a P6 file as a (height, width) array."""
    with open(path, "rb") as fh:
        data = fh.read()
    parts = data.split(maxsplit=4)
    if parts[0] != b"P6":
        raise ValueError("not a binary PPM file")
    width, height, maxval = int(parts[1]), int(parts[2]), int(parts[3])
    if maxval != 255:
        raise ValueError("only 8-bit PPM supported")
    pixels = np.frombuffer(parts[4], dtype=np.uint8).reshape(height, width, 3)
    return pixels[:, :, 0]


def write_key_values(path, items):
    with open(path, "w") as fh:
        for key, value in items:
            fh.write(f"{key}={format_value(value)}\n")


def read_key_values(path):
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                key, _, value = line.partition("=")
                out[key] = parse_value(value)
    return out


def write_scale(path, vmin, vmax):
    write_key_values(path, [("v_min", vmin), ("v_max", vmax)])


def finite_or_nan(value):
    return value if math.isfinite(value) else math.nan
