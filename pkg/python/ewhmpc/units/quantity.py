from dataclasses import dataclass

from .physics import Physics

@dataclass(frozen=True)
class Temperature():
    value: float        # K

    @classmethod
    def from_f(cls, t):
        return cls(Physics.f_to_k(t))

    @classmethod
    def from_c(cls, t):
        return cls(Physics.c_to_k(t))

    def to_f(self):
        return Physics.k_to_f(self.value)

    def to_c(self):
        return Physics.k_to_c(self.value)

@dataclass(frozen=True)
class Volume():
    value: float        # m3

    @classmethod
    def from_gal(cls, v):
        return cls(Physics.gal_to_m3(v))

    def to_gal(self):
        return Physics.m3_to_gal(self.value)

@dataclass(frozen=True)
class Power():
    value: float        # W

    @classmethod
    def from_kw(cls, p):
        return cls(Physics.kw_to_w(p))

    def to_kw(self):
        return Physics.w_to_kw(self.value)

@dataclass(frozen=True)
class Energy():
    value: float        # J

    @classmethod
    def from_kwh(cls, e):
        return cls(Physics.kwh_to_j(e))

    def to_kwh(self):
        return Physics.j_to_kwh(self.value)

@dataclass(frozen=True)
class Duration():
    value: float        # s

    @classmethod
    def from_h(cls, t):
        return cls(Physics.h_to_s(t))

    @classmethod
    def from_min(cls, t):
        return cls(t * Physics.S_PER_MIN)

    def to_h(self):
        return Physics.s_to_h(self.value)
