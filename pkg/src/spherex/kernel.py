"""Hot-loop kernel: coefficient accumulation for cyclotomic sums.

The compiled extension (spherex._speedups, built from _speedups.pyx) runs the
same operations on int64 arrays with overflow checking; when it is missing, or
an operation would overflow, the pure-Python big-integer path takes over.
Set SPHEREX_KERNEL=pure to disable the compiled path entirely.
"""

import os

try:
    from spherex import _speedups as _C
except ImportError:
    _C = None

if os.environ.get("SPHEREX_KERNEL", "").lower() == "pure":
    _C = None

HAVE_FAST = _C is not None


def kernel_name():
    return "compiled" if HAVE_FAST else "pure"


def addmul_pure(nums, n, phi, row, ae, ac, fa, be, bc, fb, scale):
    """nums += scale * (sum_i ac[i] z^(ae[i]*fa)) * (sum_j bc[j] z^(be[j]*fb)).

    nums is a dense length-phi coefficient vector; row(e - phi) gives the
    expansion of z^e in the power basis for e in [phi, n).
    """
    for i in range(len(ae)):
        eai = ae[i] * fa
        cai = ac[i] * scale
        for j in range(len(be)):
            e = (eai + be[j] * fb) % n
            c = cai * bc[j]
            if e < phi:
                nums[e] += c
            else:
                for re, rc in row(e - phi):
                    nums[re] += rc * c


def scale_pure(nums, factor):
    for i in range(len(nums)):
        nums[i] *= factor


def addmul_fast(nums, n, phi, row_off, row_exps, row_coefs, ae, ac, fa, be, bc, fb, scale):
    """Compiled twin of addmul_pure; raises OverflowError when int64 is not enough."""
    _C.addmul_terms(nums, n, phi, row_off, row_exps, row_coefs, ae, ac, fa, be, bc, fb, scale)


def scale_fast(nums, factor):
    _C.scale_inplace(nums, factor)
