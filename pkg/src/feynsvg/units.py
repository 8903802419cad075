"""TeX length units.

Geometry is carried in centimetres; decoration parameters are kept in TeX
points and converted at the boundary.
"""

PT_PER_IN = 72.27
CM_PER_IN = 2.54
PT_PER_CM = PT_PER_IN / CM_PER_IN
PT_PER_MM = PT_PER_CM / 10.0

# 96 CSS px per inch
DEFAULT_PPC = 37.7953

UNIT_TO_PT = {"pt": 1.0, "mm": PT_PER_MM, "cm": PT_PER_CM, "in": PT_PER_IN}


def to_pt(value: float, unit: str) -> float:
    return value * UNIT_TO_PT[unit]


def pt_to_cm(pt: float) -> float:
    return pt / PT_PER_CM


def cm_to_pt(cm: float) -> float:
    return cm * PT_PER_CM
