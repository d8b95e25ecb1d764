"""
Degree-valued trigonometric functions.
Path: src/algebra/functions.py

sind(30) folds to 1/2 exactly; sind(37) stays symbolic until evalf.
"""
import numpy as np
import sympy


class _DegreeTrig(sympy.Function):
    nargs = 1
    _radian = None
    _label = ""

    @classmethod
    def eval(cls, arg):
        if arg.is_Number:
            value = cls._radian(arg * sympy.pi / 180)
            if value.is_finite is False:
                return None
            if not value.has(sympy.sin, sympy.cos, sympy.tan, sympy.cot):
                return value
        return None

    def radian_form(self) -> sympy.Expr:
        return self._radian(self.args[0] * sympy.pi / 180)

    def _eval_evalf(self, prec):
        if not self.args[0].is_number:
            return None
        return self.radian_form()._eval_evalf(prec)

    def _sympystr(self, printer):
        return f"{self._label}({printer._print(self.args[0])})"


class sind(_DegreeTrig):
    _radian = sympy.sin
    _label = "sin"


class cosd(_DegreeTrig):
    _radian = sympy.cos
    _label = "cos"


class tand(_DegreeTrig):
    _radian = sympy.tan
    _label = "tan"


class cotd(_DegreeTrig):
    _radian = sympy.cot
    _label = "cot"


DEGREE_FUNCTIONS = {"sin": sind, "cos": cosd, "tan": tand, "cot": cotd}

# lambdify namespace for vectorized evaluation
NUMPY_NAMESPACE = {
    "sind": lambda x: np.sin(np.radians(x)),
    "cosd": lambda x: np.cos(np.radians(x)),
    "tand": lambda x: np.tan(np.radians(x)),
    "cotd": lambda x: 1.0 / np.tan(np.radians(x)),
}
