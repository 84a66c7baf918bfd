#!/usr/bin/env python3
"""Benchmark the compiled kernel core against the numpy fallback.

Runs the three hot reductions (abs2, entropy_sum, moments) on Gaussian
densities of increasing size and reports per-call times and the speedup of
the compiled backend.  Usage: python benchmarks/bench_kernels.py
"""

import timeit

import numpy as np

from demonlab.kernels import available_backends, backend_module

SIZES = (4_096, 65_536, 1_048_576)
REPEATS = 5


def make_inputs(n):
    x = np.linspace(-8.0, 8.0, n, endpoint=False)
    spacing = 16.0 / n
    psi = (2.0 * np.pi) ** (-0.25) * np.exp(-(x**2) / 4.0) * np.exp(2j * x)
    rho = np.abs(psi) ** 2
    rho /= rho.sum() * spacing
    return psi.astype(np.complex128), rho, spacing


def best_time(fn, number):
    return min(timeit.repeat(fn, number=number, repeat=REPEATS)) / number


def main():
    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    header = f"{'kernel':12s} {'n':>9s}" + "".join(f" {b + ' (us)':>14s}" for b in backends)
    if len(backends) == 2:
        header += f" {'speedup':>9s}"
    print(header)
    for n in SIZES:
        psi, rho, spacing = make_inputs(n)
        number = max(10, 2_000_000 // n)
        cases = {
            "abs2": lambda impl: impl.abs2(psi),
            "entropy_sum": lambda impl: impl.entropy_sum(rho, spacing),
            "moments": lambda impl: impl.moments(rho, -8.0, spacing),
        }
        for name, call in cases.items():
            times = [
                best_time(lambda impl=backend_module(b): call(impl), number)
                for b in backends
            ]
            row = f"{name:12s} {n:>9d}" + "".join(f" {t * 1e6:>14.2f}" for t in times)
            if len(times) == 2:
                row += f" {times[0] / times[1]:>8.2f}x"
            print(row)


if __name__ == "__main__":
    main()
