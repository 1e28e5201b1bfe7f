"""Flat-array message-passing kernels for the binary and quaternary decoders.

Everything here operates on preallocated primitive arrays owned by the
decoder wrappers.  The Tanner graph is stored twice: check-major (edges of
check m occupy the contiguous slice chk_ptr[m]:chk_ptr[m+1]) and
variable-major (var_edge[var_ptr[n]:var_ptr[n+1]] lists the edge ids of
variable n).  Messages live on edges:

    d[e]      difference q0 - q1 of the variable-to-check belief pair
    delta[e]  signed check-to-variable difference (the delta rule)
    r0[e], r1[e]  check-to-variable pair derived from delta[e]

Kernels are compiled with numba when it is importable and run as plain
Python otherwise (identical semantics, much slower).

stats layout: [min d, max d, min delta, max delta, max |r0+r1-1| pre-modifier]
counts layout: [delta updates, d updates]
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


MOD_NONE = 0
MOD_ALPHA_C = 1  # param = 1/alpha_c
MOD_ALPHA_V = 2  # param = 1/alpha_v
MOD_BETA = 3     # param = exp(beta)


@njit(cache=True, nogil=True)
def _finish_r(t0, t1, mode, param, clamp_eps):
    """Apply the active check-side modifier, then clamp and rescale the pair."""
    if mode == MOD_ALPHA_C:
        t0 = t0 ** param
        t1 = t1 ** param
    elif mode == MOD_BETA:
        if t1 > 0.0 and t0 / t1 > param:
            t0 = t0 / param
        elif t0 > 0.0 and t1 / t0 > param:
            t1 = t1 / param
        else:
            t0 = 0.5
            t1 = 0.5
    lo = clamp_eps
    hi = 1.0 - clamp_eps
    if t0 < lo:
        t0 = lo
    elif t0 > hi:
        t0 = hi
    if t1 < lo:
        t1 = lo
    elif t1 > hi:
        t1 = hi
    s = t0 + t1
    return t0 / s, t1 / s


@njit(cache=True, nogil=True)
def _delta_one(e, m, chk_ptr, d, z_sign):
    """Exclusion product of d over check m's edges, signed by the syndrome."""
    prod = z_sign[m]
    for e2 in range(chk_ptr[m], chk_ptr[m + 1]):
        if e2 != e:
            prod *= d[e2]
    return prod


# -- quaternary ---------------------------------------------------------------


@njit(cache=True, nogil=True)
def bp4_init(var_ptr, var_edge, chk_pauli, prior, d, stats):
    n_var = var_ptr.size - 1
    for n in range(n_var):
        for i in range(var_ptr[n], var_ptr[n + 1]):
            e = var_edge[i]
            q0 = prior[n, 0] + prior[n, chk_pauli[e]]
            val = q0 - (1.0 - q0)
            d[e] = val
            if val < stats[0]:
                stats[0] = val
            if val > stats[1]:
                stats[1] = val


@njit(cache=True, nogil=True)
def _bp4_var_update(n, var_ptr, var_edge, chk_pauli, prior, d, delta, r0, r1,
                    q_post, mode, param, clamp_eps, pre, suf, stats, counts):
    va = var_ptr[n]
    vb = var_ptr[n + 1]
    deg = vb - va
    for i in range(deg):
        e = var_edge[va + i]
        dl = delta[e]
        t0 = 0.5 * (1.0 + dl)
        t1 = 0.5 * (1.0 - dl)
        dev = abs(t0 + t1 - 1.0)
        if dev > stats[4]:
            stats[4] = dev
        r0[e], r1[e] = _finish_r(t0, t1, mode, param, clamp_eps)
    # per-candidate prefix/suffix products of the selected r values
    for w in range(4):
        pre[0, w] = 1.0
    for i in range(deg):
        e = var_edge[va + i]
        s = chk_pauli[e]
        for w in range(4):
            rv = r0[e] if (w == 0 or w == s) else r1[e]
            pre[i + 1, w] = pre[i, w] * rv
    for w in range(4):
        suf[deg, w] = 1.0
    for i in range(deg - 1, -1, -1):
        e = var_edge[va + i]
        s = chk_pauli[e]
        for w in range(4):
            rv = r0[e] if (w == 0 or w == s) else r1[e]
            suf[i, w] = suf[i + 1, w] * rv
    for w in range(4):
        q_post[n, w] = prior[n, w] * pre[deg, w]
    for i in range(deg):
        e = var_edge[va + i]
        s = chk_pauli[e]
        qi = prior[n, 0] * pre[i, 0] * suf[i + 1, 0]
        qx = prior[n, 1] * pre[i, 1] * suf[i + 1, 1]
        qy = prior[n, 2] * pre[i, 2] * suf[i + 1, 2]
        qz = prior[n, 3] * pre[i, 3] * suf[i + 1, 3]
        if s == 1:
            q0 = qi + qx
            q1 = qy + qz
        elif s == 2:
            q0 = qi + qy
            q1 = qx + qz
        else:
            q0 = qi + qz
            q1 = qx + qy
        if mode == MOD_ALPHA_V:
            q0 = q0 ** param
            q1 = q1 ** param
        tot = q0 + q1
        if tot <= 0.0:
            q0 = 0.5
            q1 = 0.5
        else:
            q0 = q0 / tot
            q1 = q1 / tot
        val = q0 - q1
        d[e] = val
        counts[1] += 1
        if val < stats[0]:
            stats[0] = val
        if val > stats[1]:
            stats[1] = val


@njit(cache=True, nogil=True)
def _bp4_decide(chk_ptr, chk_var, chk_pauli, z_bits, q_post, e_hat):
    n_var = q_post.shape[0]
    for n in range(n_var):
        best = 0
        bv = q_post[n, 0]
        for w in range(1, 4):
            if q_post[n, w] > bv:
                best = w
                bv = q_post[n, w]
        e_hat[n] = best
    ok = True
    for m in range(chk_ptr.size - 1):
        par = 0
        for e in range(chk_ptr[m], chk_ptr[m + 1]):
            w = e_hat[chk_var[e]]
            s = chk_pauli[e]
            if w != 0 and w != s:
                par ^= 1
        if par != z_bits[m]:
            ok = False
            break
    return ok


@njit(cache=True, nogil=True)
def bp4_parallel_step(chk_ptr, chk_var, chk_pauli, edge_chk, var_ptr, var_edge,
                      z_bits, z_sign, prior, d, delta, r0, r1, q_post, e_hat,
                      mode, param, clamp_eps, pre, suf, stats, counts):
    n_chk = chk_ptr.size - 1
    for m in range(n_chk):
        a = chk_ptr[m]
        b = chk_ptr[m + 1]
        prod = 1.0
        for e in range(a, b):
            delta[e] = prod
            prod *= d[e]
        prod = z_sign[m]
        for e in range(b - 1, a - 1, -1):
            val = delta[e] * prod
            delta[e] = val
            prod *= d[e]
            counts[0] += 1
            if val < stats[2]:
                stats[2] = val
            if val > stats[3]:
                stats[3] = val
    for n in range(var_ptr.size - 1):
        _bp4_var_update(n, var_ptr, var_edge, chk_pauli, prior, d, delta, r0, r1,
                        q_post, mode, param, clamp_eps, pre, suf, stats, counts)
    return _bp4_decide(chk_ptr, chk_var, chk_pauli, z_bits, q_post, e_hat)


@njit(cache=True, nogil=True)
def bp4_serial_step(chk_ptr, chk_var, chk_pauli, edge_chk, var_ptr, var_edge,
                    z_bits, z_sign, prior, d, delta, r0, r1, q_post, e_hat,
                    mode, param, clamp_eps, pre, suf, stats, counts):
    for n in range(var_ptr.size - 1):
        for i in range(var_ptr[n], var_ptr[n + 1]):
            e = var_edge[i]
            val = _delta_one(e, edge_chk[e], chk_ptr, d, z_sign)
            delta[e] = val
            counts[0] += 1
            if val < stats[2]:
                stats[2] = val
            if val > stats[3]:
                stats[3] = val
        _bp4_var_update(n, var_ptr, var_edge, chk_pauli, prior, d, delta, r0, r1,
                        q_post, mode, param, clamp_eps, pre, suf, stats, counts)
    return _bp4_decide(chk_ptr, chk_var, chk_pauli, z_bits, q_post, e_hat)


# -- binary -------------------------------------------------------------------


@njit(cache=True, nogil=True)
def bp2_init(var_ptr, var_edge, prior, d, stats):
    n_var = var_ptr.size - 1
    for n in range(n_var):
        val = prior[n, 0] - prior[n, 1]
        for i in range(var_ptr[n], var_ptr[n + 1]):
            d[var_edge[i]] = val
        if var_ptr[n + 1] > var_ptr[n]:
            if val < stats[0]:
                stats[0] = val
            if val > stats[1]:
                stats[1] = val


@njit(cache=True, nogil=True)
def _bp2_var_update(n, var_ptr, var_edge, prior, d, delta, r0, r1, q_post,
                    mode, param, clamp_eps, pre, suf, stats, counts):
    va = var_ptr[n]
    vb = var_ptr[n + 1]
    deg = vb - va
    for i in range(deg):
        e = var_edge[va + i]
        dl = delta[e]
        t0 = 0.5 * (1.0 + dl)
        t1 = 0.5 * (1.0 - dl)
        dev = abs(t0 + t1 - 1.0)
        if dev > stats[4]:
            stats[4] = dev
        r0[e], r1[e] = _finish_r(t0, t1, mode, param, clamp_eps)
    pre[0, 0] = 1.0
    pre[0, 1] = 1.0
    for i in range(deg):
        e = var_edge[va + i]
        pre[i + 1, 0] = pre[i, 0] * r0[e]
        pre[i + 1, 1] = pre[i, 1] * r1[e]
    suf[deg, 0] = 1.0
    suf[deg, 1] = 1.0
    for i in range(deg - 1, -1, -1):
        e = var_edge[va + i]
        suf[i, 0] = suf[i + 1, 0] * r0[e]
        suf[i, 1] = suf[i + 1, 1] * r1[e]
    q_post[n, 0] = prior[n, 0] * pre[deg, 0]
    q_post[n, 1] = prior[n, 1] * pre[deg, 1]
    for i in range(deg):
        e = var_edge[va + i]
        q0 = prior[n, 0] * pre[i, 0] * suf[i + 1, 0]
        q1 = prior[n, 1] * pre[i, 1] * suf[i + 1, 1]
        if mode == MOD_ALPHA_V:
            q0 = q0 ** param
            q1 = q1 ** param
        tot = q0 + q1
        if tot <= 0.0:
            q0 = 0.5
            q1 = 0.5
        else:
            q0 = q0 / tot
            q1 = q1 / tot
        val = q0 - q1
        d[e] = val
        counts[1] += 1
        if val < stats[0]:
            stats[0] = val
        if val > stats[1]:
            stats[1] = val


@njit(cache=True, nogil=True)
def _bp2_decide(chk_ptr, chk_var, z_bits, q_post, e_hat):
    n_var = q_post.shape[0]
    for n in range(n_var):
        # ties resolve to 1: flipping is the active choice
        e_hat[n] = 0 if q_post[n, 0] > q_post[n, 1] else 1
    ok = True
    for m in range(chk_ptr.size - 1):
        par = 0
        for e in range(chk_ptr[m], chk_ptr[m + 1]):
            par ^= e_hat[chk_var[e]]
        if par != z_bits[m]:
            ok = False
            break
    return ok


@njit(cache=True, nogil=True)
def bp2_parallel_step(chk_ptr, chk_var, edge_chk, var_ptr, var_edge, z_bits,
                      z_sign, prior, d, delta, r0, r1, q_post, e_hat,
                      mode, param, clamp_eps, pre, suf, stats, counts):
    n_chk = chk_ptr.size - 1
    for m in range(n_chk):
        a = chk_ptr[m]
        b = chk_ptr[m + 1]
        prod = 1.0
        for e in range(a, b):
            delta[e] = prod
            prod *= d[e]
        prod = z_sign[m]
        for e in range(b - 1, a - 1, -1):
            val = delta[e] * prod
            delta[e] = val
            prod *= d[e]
            counts[0] += 1
            if val < stats[2]:
                stats[2] = val
            if val > stats[3]:
                stats[3] = val
    for n in range(var_ptr.size - 1):
        _bp2_var_update(n, var_ptr, var_edge, prior, d, delta, r0, r1, q_post,
                        mode, param, clamp_eps, pre, suf, stats, counts)
    return _bp2_decide(chk_ptr, chk_var, z_bits, q_post, e_hat)


@njit(cache=True, nogil=True)
def bp2_serial_step(chk_ptr, chk_var, edge_chk, var_ptr, var_edge, z_bits,
                    z_sign, prior, d, delta, r0, r1, q_post, e_hat,
                    mode, param, clamp_eps, pre, suf, stats, counts):
    for n in range(var_ptr.size - 1):
        for i in range(var_ptr[n], var_ptr[n + 1]):
            e = var_edge[i]
            val = _delta_one(e, edge_chk[e], chk_ptr, d, z_sign)
            delta[e] = val
            counts[0] += 1
            if val < stats[2]:
                stats[2] = val
            if val > stats[3]:
                stats[3] = val
        _bp2_var_update(n, var_ptr, var_edge, prior, d, delta, r0, r1, q_post,
                        mode, param, clamp_eps, pre, suf, stats, counts)
    return _bp2_decide(chk_ptr, chk_var, z_bits, q_post, e_hat)
