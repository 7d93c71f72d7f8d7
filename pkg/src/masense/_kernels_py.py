"""Pure-numpy implementations of the hot kernels.

Same call signatures as the compiled extension ``masense._kernels``; the
active backend is chosen in :mod:`masense.kernels`.
"""

import numpy as np

BACKEND = "numpy"


def noiseless_samples(delays, upsilon, freqs, scale):
    """Sum of per-path complex exponentials over positions and subcarriers.

    delays: (n_pos, L) total delay per position/path, seconds.
    upsilon: (L,) complex path attenuations.
    freqs: (K,) subcarrier frequencies, Hz.
    Returns the (n_pos, K) matrix scale * sum_l upsilon_l * exp(-2j pi f_k d_ml).
    """
    phase = (-2j * np.pi) * (delays[:, None, :] * freqs[None, :, None])
    return scale * (np.exp(phase) @ upsilon)


def smoothed_covariance(samples, m_sub):
    """Average outer products of all length-m_sub windows over every subcarrier.

    samples: (M, K) complex. Returns the (m_sub, m_sub) Hermitian average over
    the Q = M - m_sub + 1 overlapping subarrays and K subcarriers.
    """
    n_pos, n_sub = samples.shape
    n_win = n_pos - m_sub + 1
    windows = np.lib.stride_tricks.sliding_window_view(samples, m_sub, axis=0)
    flat = windows.reshape(n_win * n_sub, m_sub)
    cov = (flat.T @ flat.conj()) / (n_sub * n_win)
    return 0.5 * (cov + cov.conj().T)


def music_null_power(noise_basis, grid, phase_factor):
    """Noise-subspace projection power ||Un^H d(theta)||^2 on a grid.

    noise_basis: (m_sub, n_noise) complex, columns spanning the noise subspace.
    grid: (G,) spatial frequencies in [-1, 1].
    phase_factor: 2 pi d / lambda, the per-element phase slope.
    """
    m_sub = noise_basis.shape[0]
    steer = np.exp((-1j * phase_factor) * np.outer(np.arange(m_sub), grid))
    proj = noise_basis.conj().T @ steer
    return np.einsum("ng,ng->g", proj.conj(), proj).real
