"""Independent reference values for the metric tests.

Run with `python3 metrics_oracle.py`; the printed numbers are frozen into
`tests/metrics_oracle.rs`. Test images are defined by integer formulas that
the Rust tests reproduce exactly.
"""
import math

import numpy as np
from scipy import ndimage
from skimage.metrics import structural_similarity

W, H = 24, 20


def img_a():
    out = np.zeros((H, W, 3))
    for y in range(H):
        for x in range(W):
            for c in range(3):
                out[y, x, c] = ((x * x * 3 + y * 7 + x * y + c * 41) * 37) % 256
    return out


def img_b():
    a = img_a()
    out = np.zeros_like(a)
    for y in range(H):
        for x in range(W):
            for c in range(3):
                out[y, x, c] = min(255, max(0, a[y, x, c] + ((x * 5 + y * 3 + c) % 21) - 10))
    return out


def luma(img):
    return 0.299 * img[:, :, 0] + 0.587 * img[:, :, 1] + 0.114 * img[:, :, 2]


def gauss_window(size=11, sigma=1.5):
    r = size // 2
    ax = np.arange(-r, r + 1, dtype=float)
    g = np.exp(-(ax ** 2) / (2 * sigma ** 2))
    w = np.outer(g, g)
    return w / w.sum()


def valid_filter(img, win):
    kh, kw = win.shape
    oh, ow = img.shape[0] - kh + 1, img.shape[1] - kw + 1
    out = np.zeros((oh, ow))
    for y in range(oh):
        for x in range(ow):
            out[y, x] = np.sum(img[y:y + kh, x:x + kw] * win)
    return out


def pcqi(a, b, L=256.0, C=3.0):
    win = gauss_window()
    mu1 = valid_filter(a, win)
    mu2 = valid_filter(b, win)
    s1 = np.maximum(0, valid_filter(a * a, win) - mu1 * mu1)
    s2 = np.maximum(0, valid_filter(b * b, win) - mu2 * mu2)
    s12 = valid_filter(a * b, win) - mu1 * mu2
    m = (4 / math.pi) * np.arctan((s12 + C) / (s1 + C))
    m = m * ((s12 + C) / (np.sqrt(s1) * np.sqrt(s2) + C))
    m = m * np.exp(-np.abs(mu1 - mu2) / L)
    return m.mean()


def blur(img):
    y, x = img.shape
    k = np.ones(9) / 9.0
    # zero padding, centered kernel
    b_ver = ndimage.correlate1d(img, k, axis=0, mode="constant", cval=0.0)
    b_hor = ndimage.correlate1d(img, k, axis=1, mode="constant", cval=0.0)
    d_f_ver = np.abs(img[1:, :] - img[:-1, :])
    d_f_hor = np.abs(img[:, 1:] - img[:, :-1])
    d_b_ver = np.abs(b_ver[1:, :] - b_ver[:-1, :])
    d_b_hor = np.abs(b_hor[:, 1:] - b_hor[:, :-1])
    v_ver = np.maximum(0, d_f_ver - d_b_ver)
    v_hor = np.maximum(0, d_f_hor - d_b_hor)
    s_d_ver = d_f_ver[1:y - 1, 1:x - 1].sum()
    s_d_hor = d_f_hor[1:y - 1, 1:x - 1].sum()
    s_v_ver = v_ver[1:y - 1, 1:x - 1].sum()
    s_v_hor = v_hor[1:y - 1, 1:x - 1].sum()
    bv = (s_d_ver - s_v_ver) / s_d_ver if s_d_ver > 0 else 0.0
    bh = (s_d_hor - s_v_hor) / s_d_hor if s_d_hor > 0 else 0.0
    return max(bv, bh)


def trimmed_mean(v, alpha=0.1):
    v = np.sort(v)
    k = len(v)
    tl = math.ceil(alpha * k)
    tr = math.floor(alpha * k)
    return v[tl:k - tr].sum() / (k - tl - tr)


def uicm(img):
    r, g, b = img[:, :, 0].ravel(), img[:, :, 1].ravel(), img[:, :, 2].ravel()
    rg = r - g
    yb = (r + g) / 2 - b
    m_rg, m_yb = trimmed_mean(rg), trimmed_mean(yb)
    v_rg = np.mean((rg - m_rg) ** 2)
    v_yb = np.mean((yb - m_yb) ** 2)
    return -0.0268 * math.hypot(m_rg, m_yb) + 0.1586 * math.sqrt(v_rg + v_yb)


def sobel_mag(ch):
    # replicate border == scipy 'nearest'
    gx = ndimage.sobel(ch, axis=1, mode="nearest")
    gy = ndimage.sobel(ch, axis=0, mode="nearest")
    return np.hypot(gx, gy)


def blocks(ch, bs=8):
    h, w = ch.shape
    for by in range(h // bs):
        for bx in range(w // bs):
            yield ch[by * bs:(by + 1) * bs, bx * bs:(bx + 1) * bs]


def eme(ch, bs=8):
    h, w = ch.shape
    n = (h // bs) * (w // bs)
    total = 0.0
    for blk in blocks(ch, bs):
        mx, mn = blk.max(), blk.min()
        if mn > 0 and mx > 0:
            total += math.log(mx / mn)
    return 2.0 / n * total


def uism(img):
    lam = (0.299, 0.587, 0.114)
    return sum(l * eme(sobel_mag(img[:, :, c]) * img[:, :, c]) for c, l in enumerate(lam))


def uiconm(img, bs=8):
    y = luma(img)
    h, w = y.shape
    n = (h // bs) * (w // bs)
    total = 0.0
    for blk in blocks(y, bs):
        mx, mn = blk.max(), blk.min()
        top, bot = mx - mn, mx + mn
        if top > 0 and bot > 0:
            ratio = top / bot
            total += ratio * math.log(ratio)
    return -total / n


def main():
    a, b = img_a(), img_b()
    ya, yb = luma(a), luma(b)
    mse = np.mean((a - b) ** 2)
    print(f"mse_ab = {mse!r}")
    print(f"psnr_ab = {10 * math.log10(255.0 ** 2 / mse)!r}")
    s = structural_similarity(ya, yb, gaussian_weights=True, sigma=1.5,
                              use_sample_covariance=False, data_range=255)
    print(f"ssim_ab = {s!r}")
    inv = 255.0 - a
    s_inv = structural_similarity(ya, luma(inv), gaussian_weights=True, sigma=1.5,
                                  use_sample_covariance=False, data_range=255)
    print(f"ssim_a_inverted = {s_inv!r}")
    # binary checker without mid-gray
    chk = np.zeros((H, W))
    for y in range(H):
        for x in range(W):
            chk[y, x] = 255.0 if ((x // 3 + y // 2) % 2 == 0) else 0.0
    s_chk = structural_similarity(chk, 255.0 - chk, gaussian_weights=True, sigma=1.5,
                                  use_sample_covariance=False, data_range=255)
    print(f"ssim_checker_inverted = {s_chk!r}")
    print(f"pcqi_ab = {pcqi(ya, yb)!r}")
    print(f"pcqi_ba = {pcqi(yb, ya)!r}")
    print(f"blur_a = {blur(ya)!r}")
    print(f"blur_b = {blur(yb)!r}")
    print(f"uicm_a = {uicm(a)!r}")
    print(f"uism_a = {uism(a)!r}")
    print(f"uiconm_a = {uiconm(a)!r}")
    print(f"uicm_b = {uicm(b)!r}")
    print(f"uism_b = {uism(b)!r}")
    print(f"uiconm_b = {uiconm(b)!r}")


if __name__ == "__main__":
    main()
