"""Independent numpy/scipy oracle for the frozen expected values in the C++ tests."""
import numpy as np
from scipy.linalg import expm, eigh

H = np.array([[-1.8310, 0.1813], [0.1813, -0.2537]])
sx = np.array([[0, 1], [1, 0]], dtype=complex)
sz = np.diag([1.0, -1.0]).astype(complex)

w, v = eigh(H)
mean = (H[0, 0] + H[1, 1]) / 2
half = (H[0, 0] - H[1, 1]) / 2
print("closed-form E_g", mean - np.hypot(half, H[0, 1]), "E_1", mean + np.hypot(half, H[0, 1]))
print("eigh", w)
tau = np.pi / np.sqrt((2 * H[0, 1]) ** 2 + (H[0, 0] - H[1, 1]) ** 2)
print("tau %.9f" % tau)
phi = (-w[0] * tau / (2 * np.pi)) % 1.0
print("phi %.12f" % phi)
print("expectation", np.exp(2j * np.pi * phi))
errbd = 5 / 360
clip0 = max(phi - errbd, 0)
print("clip0 %.9f  theta1 %.9f" % (clip0, (8 * (phi - clip0)) % 1))
print("binary phi:", "".join(str(int(phi * 2 ** (j + 1)) % 2) for j in range(25)))
print("interp s=0.5", 0.5 * sx.real + 0.5 * H)

def asp(T, steps):
    M = steps - 1
    d = T / steps
    psi = np.array([1, -1], dtype=complex) / np.sqrt(2)
    for m in range(steps):
        s = m / M if M > 0 else 1.0
        half = expm(-1j * d / 2 * (1 - s) * sx)
        psi = half @ expm(-1j * s * H * d) @ half @ psi
    return abs(np.vdot(v[:, 0], psi)) ** 2

grid = np.arange(1, 30.0001, 0.5)
fid = [asp(T, 6) for T in grid]
i = int(np.argmax(fid))
print("asp6 best T", grid[i], "fid", fid[i])
print("asp200 T=50", asp(50, 200), " asp6 T=50", asp(50, 6))

def trot_err(d, s=0.5):
    half = expm(-1j * d / 2 * (1 - s) * sx)
    approx = half @ expm(-1j * s * H * d) @ half
    exact = expm(-1j * d * ((1 - s) * sx + s * H))
    return np.max(np.abs(approx - exact))
for d in (0.4, 0.2, 0.1, 0.05):
    print("trotter", d, trot_err(d), trot_err(d) / trot_err(d / 2))

# coherent error: eigenphase of exp(-i(H+eps sz)tau)
eps = 1e-4
w2, v2 = eigh(H + eps * sz.real)
phi2 = (-w2[0] * tau / (2 * np.pi)) % 1
print("perturbed phase shift (turns)", phi2 - phi, " bound eps*tau/2pi", eps * tau / 2 / np.pi)
print("E from 0.572022:", -2 * np.pi * 0.572022 / tau)
print("bound 17 bits:", errbd * 8.0 ** -5, 2.0 ** -21)

# partial trace example: (|0>+e^{i t}|1>)/sqrt2 (x) g, keep probe -> rho[0][1]
t = 0.7
probe = np.array([1, np.exp(1j * t)]) / np.sqrt(2)
st = np.kron(probe, v[:, 0])
rho = np.outer(st, st.conj()).reshape(2, 2, 2, 2)
red = np.einsum("ijkj->ik", rho)
print("ptrace rho01", red[0, 1], "expected", np.exp(-1j * t) / 2)
