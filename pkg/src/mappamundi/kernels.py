"""Hot numeric kernels for the stress layout.

Two interchangeable backends:

* numba ``@njit`` loop kernels (default when numba imports), and
* vectorized pure-numpy kernels, selected with ``MAPPA_DISABLE_NUMBA=1``
  or when numba is not installed.

Both are deterministic given the same inputs; see
benchmarks/bench_layout.py for the speed comparison.
"""

from __future__ import annotations

import math
import os

import numpy as np

_FLAG = os.environ.get("MAPPA_DISABLE_NUMBA", "").lower() in ("1", "true", "yes")

if not _FLAG:
    try:
        from numba import njit
    except ImportError:
        njit = None
else:
    njit = None

NUMBA_ENABLED = njit is not None


# ---------------------------------------------------------------- numpy path

def _pair_dists_np(pos):
    diff = pos[:, None, :] - pos[None, :, :]
    return np.sqrt((diff * diff).sum(axis=2))


def _stress_np(pos, edges, targets, pinned, prev, pin_weight, sep_min_d, sep_weight):
    s = 0.0
    if edges.shape[0]:
        delta = pos[edges[:, 0]] - pos[edges[:, 1]]
        d = np.sqrt((delta * delta).sum(axis=1))
        s += float(((d - targets) ** 2).sum())
    if pinned.any():
        drift = pos[pinned] - prev[pinned]
        s += pin_weight * float((drift * drift).sum())
    if sep_weight > 0.0 and pos.shape[0] > 1:
        d = _pair_dists_np(pos)
        iu = np.triu_indices(pos.shape[0], k=1)
        overlap = np.maximum(0.0, sep_min_d - d[iu])
        s += sep_weight * float((overlap * overlap).sum())
    return s


def _gradient_np(pos, edges, targets, pinned, prev, pin_weight, sep_min_d, sep_weight, grad):
    grad[:] = 0.0
    if edges.shape[0]:
        delta = pos[edges[:, 0]] - pos[edges[:, 1]]
        d = np.sqrt((delta * delta).sum(axis=1))
        degenerate = d < 1e-9
        if degenerate.any():
            d = np.where(degenerate, 1e-9, d)
            delta[degenerate] = (1e-9, 0.0)
        contrib = (2.0 * (d - targets) / d)[:, None] * delta
        np.add.at(grad, edges[:, 0], contrib)
        np.add.at(grad, edges[:, 1], -contrib)
    if pinned.any():
        grad[pinned] += 2.0 * pin_weight * (pos[pinned] - prev[pinned])
    if sep_weight > 0.0 and pos.shape[0] > 1:
        diff = pos[:, None, :] - pos[None, :, :]
        d = np.sqrt((diff * diff).sum(axis=2))
        np.fill_diagonal(d, 1.0)
        overlap = np.maximum(0.0, sep_min_d - d)
        np.fill_diagonal(overlap, 0.0)
        close = (d < 1e-9) & (overlap > 0.0)
        if close.any():
            d = np.where(close, 1e-9, d)
            diff[close] = (1e-9, 0.0)
        coeff = -2.0 * sep_weight * overlap / d
        grad += (coeff[:, :, None] * diff).sum(axis=1)


def _descend_np(pos, edges, targets, pinned, prev, pin_weight, sep_min_d, sep_weight,
                max_iters, eps, history):
    n = pos.shape[0]
    grad = np.zeros((n, 2))
    s = _stress_np(pos, edges, targets, pinned, prev, pin_weight, sep_min_d, sep_weight)
    step = 0.05
    for it in range(max_iters):
        _gradient_np(pos, edges, targets, pinned, prev, pin_weight, sep_min_d, sep_weight, grad)
        step *= 2.0
        accepted = False
        for _ in range(48):
            trial = pos - step * grad
            s_new = _stress_np(trial, edges, targets, pinned, prev, pin_weight,
                               sep_min_d, sep_weight)
            if s_new < s:
                accepted = True
                break
            step *= 0.5
        if not accepted:
            history[it] = s
            return it + 1
        max_disp = float(np.sqrt(((step * grad) ** 2).sum(axis=1)).max()) if n else 0.0
        pos[:] = trial
        s = s_new
        history[it] = s
        if max_disp < eps:
            return it + 1
    return max_iters


def _collisions_np(pos, radius, max_passes):
    # pair resolution is inherently sequential; mirror the loop kernel exactly
    n = pos.shape[0]
    min_d = 2.0 * radius
    for p in range(max_passes):
        moved = False
        for i in range(n):
            for j in range(i + 1, n):
                dx = pos[j, 0] - pos[i, 0]
                dy = pos[j, 1] - pos[i, 1]
                d = math.sqrt(dx * dx + dy * dy)
                if d < min_d - 1e-9:
                    if d < 1e-9:
                        ang = 0.618033988749895 * (i * n + j)
                        dx, dy, d = math.cos(ang), math.sin(ang), 1.0
                    push = 0.5 * (min_d - d) + 1e-6
                    ux, uy = dx / d, dy / d
                    pos[i, 0] -= ux * push
                    pos[i, 1] -= uy * push
                    pos[j, 0] += ux * push
                    pos[j, 1] += uy * push
                    moved = True
        if not moved:
            return p
    return max_passes


# ---------------------------------------------------------------- numba path

if NUMBA_ENABLED:

    @njit(cache=True)
    def _stress_nb(pos, edges, targets, pinned, prev, pin_weight, sep_min_d, sep_weight):
        s = 0.0
        for e in range(edges.shape[0]):
            i, j = edges[e, 0], edges[e, 1]
            dx = pos[i, 0] - pos[j, 0]
            dy = pos[i, 1] - pos[j, 1]
            diff = math.sqrt(dx * dx + dy * dy) - targets[e]
            s += diff * diff
        for i in range(pos.shape[0]):
            if pinned[i]:
                dx = pos[i, 0] - prev[i, 0]
                dy = pos[i, 1] - prev[i, 1]
                s += pin_weight * (dx * dx + dy * dy)
        if sep_weight > 0.0:
            n = pos.shape[0]
            for i in range(n):
                for j in range(i + 1, n):
                    dx = pos[i, 0] - pos[j, 0]
                    dy = pos[i, 1] - pos[j, 1]
                    d = math.sqrt(dx * dx + dy * dy)
                    if d < sep_min_d:
                        ov = sep_min_d - d
                        s += sep_weight * ov * ov
        return s

    @njit(cache=True)
    def _gradient_nb(pos, edges, targets, pinned, prev, pin_weight, sep_min_d, sep_weight, grad):
        grad[:] = 0.0
        for e in range(edges.shape[0]):
            i, j = edges[e, 0], edges[e, 1]
            dx = pos[i, 0] - pos[j, 0]
            dy = pos[i, 1] - pos[j, 1]
            d = math.sqrt(dx * dx + dy * dy)
            if d < 1e-9:
                d = 1e-9
                dx = 1e-9
                dy = 0.0
            coeff = 2.0 * (d - targets[e]) / d
            grad[i, 0] += coeff * dx
            grad[i, 1] += coeff * dy
            grad[j, 0] -= coeff * dx
            grad[j, 1] -= coeff * dy
        for i in range(pos.shape[0]):
            if pinned[i]:
                grad[i, 0] += 2.0 * pin_weight * (pos[i, 0] - prev[i, 0])
                grad[i, 1] += 2.0 * pin_weight * (pos[i, 1] - prev[i, 1])
        if sep_weight > 0.0:
            n = pos.shape[0]
            for i in range(n):
                for j in range(i + 1, n):
                    dx = pos[i, 0] - pos[j, 0]
                    dy = pos[i, 1] - pos[j, 1]
                    d = math.sqrt(dx * dx + dy * dy)
                    if d < sep_min_d:
                        if d < 1e-9:
                            d = 1e-9
                            dx = 1e-9
                            dy = 0.0
                        coeff = -2.0 * sep_weight * (sep_min_d - d) / d
                        grad[i, 0] += coeff * dx
                        grad[i, 1] += coeff * dy
                        grad[j, 0] -= coeff * dx
                        grad[j, 1] -= coeff * dy

    @njit(cache=True)
    def _descend_nb(pos, edges, targets, pinned, prev, pin_weight, sep_min_d, sep_weight,
                    max_iters, eps, history):
        n = pos.shape[0]
        grad = np.zeros((n, 2))
        trial = np.zeros((n, 2))
        s = _stress_nb(pos, edges, targets, pinned, prev, pin_weight, sep_min_d, sep_weight)
        step = 0.05
        for it in range(max_iters):
            _gradient_nb(pos, edges, targets, pinned, prev, pin_weight,
                         sep_min_d, sep_weight, grad)
            step *= 2.0
            accepted = False
            s_new = s
            for _ in range(48):
                for i in range(n):
                    trial[i, 0] = pos[i, 0] - step * grad[i, 0]
                    trial[i, 1] = pos[i, 1] - step * grad[i, 1]
                s_new = _stress_nb(trial, edges, targets, pinned, prev, pin_weight,
                                   sep_min_d, sep_weight)
                if s_new < s:
                    accepted = True
                    break
                step *= 0.5
            if not accepted:
                history[it] = s
                return it + 1
            max_disp = 0.0
            for i in range(n):
                dx = step * grad[i, 0]
                dy = step * grad[i, 1]
                disp = math.sqrt(dx * dx + dy * dy)
                if disp > max_disp:
                    max_disp = disp
                pos[i, 0] = trial[i, 0]
                pos[i, 1] = trial[i, 1]
            s = s_new
            history[it] = s
            if max_disp < eps:
                return it + 1
        return max_iters

    @njit(cache=True)
    def _collisions_nb(pos, radius, max_passes):
        n = pos.shape[0]
        min_d = 2.0 * radius
        for p in range(max_passes):
            moved = False
            for i in range(n):
                for j in range(i + 1, n):
                    dx = pos[j, 0] - pos[i, 0]
                    dy = pos[j, 1] - pos[i, 1]
                    d = math.sqrt(dx * dx + dy * dy)
                    if d < min_d - 1e-9:
                        if d < 1e-9:
                            ang = 0.618033988749895 * (i * n + j)
                            dx = math.cos(ang)
                            dy = math.sin(ang)
                            d = 1.0
                        push = 0.5 * (min_d - d) + 1e-6
                        ux = dx / d
                        uy = dy / d
                        pos[i, 0] -= ux * push
                        pos[i, 1] -= uy * push
                        pos[j, 0] += ux * push
                        pos[j, 1] += uy * push
                        moved = True
            if not moved:
                return p
        return max_passes

    stress_value = _stress_nb
    stress_gradient = _gradient_nb
    descend = _descend_nb
    resolve_collisions = _collisions_nb
else:
    stress_value = _stress_np
    stress_gradient = _gradient_np
    descend = _descend_np
    resolve_collisions = _collisions_np
