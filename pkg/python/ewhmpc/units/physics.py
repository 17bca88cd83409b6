class Physics():
    """
    Physical constants and unit conversions. Every other module works in SI
    and uses these helpers at the configuration and reporting boundaries only.
    """

    RHO_WATER = 1000.0              # kg/m3
    CP_WATER = 4181.3               # J/(kg K)

    ZERO_CELSIUS = 273.15           # K
    J_PER_KWH = 3.6e6
    J_PER_WH = 3600.0
    M3_PER_GAL = 0.0037854118
    M3_PER_L = 1e-3
    S_PER_MIN = 60.0
    S_PER_H = 3600.0
    S_PER_DAY = 86400.0

    @staticmethod
    def f_to_k(t):
        return (t - 32.0) * 5.0 / 9.0 + Physics.ZERO_CELSIUS

    @staticmethod
    def k_to_f(t):
        return (t - Physics.ZERO_CELSIUS) * 9.0 / 5.0 + 32.0

    @staticmethod
    def c_to_k(t):
        return t + Physics.ZERO_CELSIUS

    @staticmethod
    def k_to_c(t):
        return t - Physics.ZERO_CELSIUS

    @staticmethod
    def delta_f_to_k(dt):
        """Temperature difference in F to K, no offset."""
        return dt * 5.0 / 9.0

    @staticmethod
    def gal_to_m3(v):
        return v * Physics.M3_PER_GAL

    @staticmethod
    def m3_to_gal(v):
        return v / Physics.M3_PER_GAL

    @staticmethod
    def gpm_to_m3s(f):
        return f * Physics.M3_PER_GAL / Physics.S_PER_MIN

    @staticmethod
    def m3s_to_gpm(f):
        return f * Physics.S_PER_MIN / Physics.M3_PER_GAL

    @staticmethod
    def j_to_kwh(e):
        return e / Physics.J_PER_KWH

    @staticmethod
    def kwh_to_j(e):
        return e * Physics.J_PER_KWH

    @staticmethod
    def h_to_s(t):
        return t * Physics.S_PER_H

    @staticmethod
    def s_to_h(t):
        return t / Physics.S_PER_H

    @staticmethod
    def kw_to_w(p):
        return p * 1e3

    @staticmethod
    def w_to_kw(p):
        return p * 1e-3

    @staticmethod
    def heat_capacity(volume):
        """Thermal capacitance of a water volume in J/K."""
        return Physics.RHO_WATER * Physics.CP_WATER * volume
