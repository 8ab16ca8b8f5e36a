#pragma once
#include <memory>
#include <string>
#include <vector>

namespace affsym {

struct CurveJet {
    double g1, g1p, g1pp;
    double g2, g2p, g2pp;
};

class Curve {
public:
    virtual ~Curve() = default;
    virtual CurveJet eval(double t) const = 0;
    virtual std::pair<double, double> domain() const = 0;
    virtual std::string name() const = 0;
};

// named built-ins: "cosh,sinh" | "cos,sin" | "t,exp" | "c2-exact"
// (c2-exact is gamma = (t, -(t^2+1)/(2t)), an exact solution of the
// proper cone-type curve condition for gamma1 = t)
std::shared_ptr<const Curve> make_builtin_curve(const std::string& name);

// analytic gamma1 choices for the synthesizer
enum class Gamma1Kind { Identity, Cosh };
CurveJet gamma1_jet(Gamma1Kind k, double t); // gamma2 slots zeroed

// gamma2 sampled on a uniform grid; gamma1 stays analytic. Values and first
// derivatives come from the integrator; second derivatives are recovered by
// differencing gamma2' (never from the synthesis right-hand side). Between
// nodes, cubic Hermite interpolation.
class SampledCurve : public Curve {
public:
    SampledCurve(Gamma1Kind g1, double t0, double dt, std::vector<double> g2,
                 std::vector<double> g2p);

    CurveJet eval(double t) const override;
    std::pair<double, double> domain() const override;
    std::string name() const override { return "sampled"; }

    double node_time(size_t i) const { return t0_ + dt_ * double(i); }
    size_t node_count() const { return g2_.size(); }
    double spacing() const { return dt_; }

    // identical curve with all node times shifted by delta
    std::shared_ptr<SampledCurve> shifted(double delta) const;

private:
    Gamma1Kind g1_;
    double t0_, dt_;
    double g1_offset_ = 0; // gamma1 evaluated at (t - offset); set by shifted()
    std::vector<double> g2_, g2p_, g2pp_;
};

} // namespace affsym
