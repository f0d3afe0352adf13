#include "dpi/picard.hpp"
#include "dpi/errors.hpp"

#include <sstream>

namespace dpi {

PicardClass PicardClass::Hx() {
    PicardClass p;
    p.c[0] = 1;
    return p;
}

PicardClass PicardClass::Hy() {
    PicardClass p;
    p.c[1] = 1;
    return p;
}

PicardClass PicardClass::E(int i) {
    if (i < 1 || i > 8) throw DomainError("E index out of range");
    PicardClass p;
    p.c[1 + i] = 1;
    return p;
}

PicardClass PicardClass::anticanonical() {
    PicardClass p;
    p.c[0] = p.c[1] = 2;
    for (int i = 2; i < 10; ++i) p.c[i] = -1;
    return p;
}

PicardClass operator+(const PicardClass& a, const PicardClass& b) {
    PicardClass r;
    for (int i = 0; i < 10; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

PicardClass operator-(const PicardClass& a, const PicardClass& b) {
    PicardClass r;
    for (int i = 0; i < 10; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

PicardClass PicardClass::operator-() const {
    PicardClass r;
    for (int i = 0; i < 10; ++i) r.c[i] = -c[i];
    return r;
}

PicardClass operator*(long k, const PicardClass& a) {
    PicardClass r;
    for (int i = 0; i < 10; ++i) r.c[i] = k * a.c[i];
    return r;
}

std::string PicardClass::str() const {
    static const char* names[10] = {"Hx", "Hy", "E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 10; ++i) {
        if (c[i] == 0) continue;
        long v = c[i];
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (std::abs(v) != 1) os << std::abs(v) << "*";
        os << names[i];
        first = false;
    }
    return first ? "0" : os.str();
}

long intersection(const PicardClass& a, const PicardClass& b) {
    long s = a.c[0] * b.c[1] + a.c[1] * b.c[0];
    for (int i = 2; i < 10; ++i) s -= a.c[i] * b.c[i];
    return s;
}

namespace {

// Images of the basis under phi_* and phi^* (columns of the tabulated action).
const std::array<PicardClass, 10>& push_images() {
    static const std::array<PicardClass, 10> imgs = [] {
        auto Hx = PicardClass::Hx;
        auto Hy = PicardClass::Hy;
        auto E = PicardClass::E;
        std::array<PicardClass, 10> a;
        a[0] = Hx() + Hy() - E(5) - E(6); // Hx
        a[1] = Hx();                      // Hy
        a[2] = E(7);                      // E1
        a[3] = E(8);                      // E2
        a[4] = Hx() - E(6);               // E3
        a[5] = Hx() - E(5);               // E4
        a[6] = E(1);                      // E5
        a[7] = E(2);                      // E6
        a[8] = E(3);                      // E7
        a[9] = E(4);                      // E8
        return a;
    }();
    return imgs;
}

const std::array<PicardClass, 10>& pull_images() {
    static const std::array<PicardClass, 10> imgs = [] {
        auto Hx = PicardClass::Hx;
        auto Hy = PicardClass::Hy;
        auto E = PicardClass::E;
        std::array<PicardClass, 10> a;
        a[0] = Hy();                      // Hx
        a[1] = Hx() + Hy() - E(3) - E(4); // Hy
        a[2] = E(5);                      // E1
        a[3] = E(6);                      // E2
        a[4] = E(7);                      // E3
        a[5] = E(8);                      // E4
        a[6] = Hy() - E(4);               // E5
        a[7] = Hy() - E(3);               // E6
        a[8] = E(1);                      // E7
        a[9] = E(2);                      // E8
        return a;
    }();
    return imgs;
}

PicardClass apply(const std::array<PicardClass, 10>& imgs, const PicardClass& x) {
    PicardClass r;
    for (int i = 0; i < 10; ++i)
        if (x.c[i] != 0) r = r + x.c[i] * imgs[i];
    return r;
}

} // namespace

PicardClass phi_push(const PicardClass& c) { return apply(push_images(), c); }
PicardClass phi_pull(const PicardClass& c) { return apply(pull_images(), c); }

std::vector<PicardClass> roots(RootKind kind) {
    auto Hx = PicardClass::Hx;
    auto Hy = PicardClass::Hy;
    auto E = PicardClass::E;
    // Source tables use H_q, H_p; the chart identification is H_q = H_x, H_p = H_y.
    if (kind == RootKind::surface)
        return {E(1) - E(2), E(3) - E(4), Hx() - E(1) - E(3),
                Hy() - E(5) - E(7), E(5) - E(6), E(7) - E(8)};
    return {Hy() - E(1) - E(2), Hx() - E(5) - E(6), Hy() - E(3) - E(4), Hx() - E(7) - E(8)};
}

std::vector<std::vector<long>> gram_matrix(const std::vector<PicardClass>& classes) {
    size_t n = classes.size();
    std::vector<std::vector<long>> g(n, std::vector<long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) g[i][j] = intersection(classes[i], classes[j]);
    return g;
}

std::vector<std::vector<long>> cartan_matrix(const std::vector<PicardClass>& classes) {
    auto g = gram_matrix(classes);
    for (auto& row : g)
        for (auto& v : row) v = -v;
    return g;
}

namespace {

// Express x exactly in the alpha basis; throws if x is outside the span.
std::array<long, 4> in_alpha_basis(const PicardClass& x) {
    auto alphas = roots(RootKind::symmetry);
    // Solve the 10x4 integer system by exact Gaussian elimination over Q.
    std::vector<std::vector<BigRat>> m(10, std::vector<BigRat>(5));
    for (int r = 0; r < 10; ++r) {
        for (int j = 0; j < 4; ++j) m[r][j] = BigRat(alphas[j].c[r]);
        m[r][4] = BigRat(x.c[r]);
    }
    int row = 0;
    std::array<int, 4> pivot_row{-1, -1, -1, -1};
    for (int col = 0; col < 4 && row < 10; ++col) {
        int p = -1;
        for (int r = row; r < 10; ++r)
            if (m[r][col] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[p], m[row]);
        for (int r = 0; r < 10; ++r) {
            if (r == row || m[r][col] == 0) continue;
            BigRat f = m[r][col] / m[row][col];
            for (int j = col; j <= 4; ++j) m[r][j] -= f * m[row][j];
        }
        pivot_row[col] = row;
        ++row;
    }
    std::array<long, 4> out{};
    for (int col = 0; col < 4; ++col) {
        if (pivot_row[col] < 0) throw DomainError("alpha basis is degenerate");
        BigRat v = m[pivot_row[col]][4] / m[pivot_row[col]][col];
        if (v.get_den() != 1) throw DomainError("class not in the alpha span over Z");
        out[col] = v.get_num().get_si();
    }
    // Consistency: rows without pivots must have zero rhs.
    for (int r = row; r < 10; ++r)
        if (m[r][4] != 0) throw DomainError("class not in the alpha span");
    return out;
}

} // namespace

std::array<std::array<long, 4>, 4> alpha_action() {
    auto alphas = roots(RootKind::symmetry);
    std::array<std::array<long, 4>, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = in_alpha_basis(phi_push(alphas[i]));
    return out;
}

std::optional<std::array<long, 4>> translation_check(int power) {
    if (power < 1) throw DomainError("translation_check needs power >= 1");
    auto alphas = roots(RootKind::symmetry);
    PicardClass dhat = PicardClass::anticanonical();
    std::array<long, 4> shift{};
    for (int i = 0; i < 4; ++i) {
        PicardClass img = alphas[i];
        for (int p = 0; p < power; ++p) img = phi_push(img);
        PicardClass diff = img - alphas[i];
        // Translation means diff = c_i * delta_hat.
        bool proportional = true;
        long c = diff.c[0] / 2; // delta_hat has leading coefficient 2
        if (2 * c != diff.c[0]) proportional = false;
        if (proportional && !(diff == c * dhat)) proportional = false;
        if (!proportional) return std::nullopt;
        shift[i] = c;
    }
    return shift;
}

std::array<long, 4> kny_translation() { return {-1, 1, -1, 1}; }
std::array<long, 4> sakai_translation() { return {-1, 0, 0, 1}; }

RootVariables root_variables_dp(long n, const ExactDPIParams& p) {
    if (p.alpha_t == 0 || p.gamma_t == 0)
        throw DegenerateParamsError("root variables need alpha_t != 0 and gamma_t != 0");
    BigRat r = p.beta_t / (p.alpha_t * 3);
    RootVariables rv;
    rv.a0 = BigRat(1, 3);
    rv.a1 = BigRat(-n, 3) - r;
    rv.a2 = BigRat(n + 1, 3) + r;
    rv.a3 = BigRat(1, 3);
    return rv;
}

std::array<BigRat, 3> pv_coeffs_dp(long n, const ExactDPIParams& p) {
    if (p.alpha_t == 0) throw DegenerateParamsError("pv_coeffs_dp needs alpha_t != 0");
    BigRat q = (p.alpha_t * n + p.beta_t) / (p.alpha_t * 3);
    return {q * q / 2, BigRat(-1, 18), -q};
}

std::vector<BasePoint> base_points(long n, const ExactDPIParams& p) {
    if (p.alpha_t == 0 || p.gamma_t == 0)
        throw DegenerateParamsError("base points need alpha_t != 0 and gamma_t != 0");
    std::vector<BasePoint> pts;
    pts.push_back({1, "X=1/x=0, y=gamma_t", p.gamma_t, 0});
    pts.push_back({2, "X=0, x(y-gamma_t)=alpha_t", p.alpha_t, 1});
    pts.push_back({3, "X=1/x=0, y=0", BigRat(0), 0});
    pts.push_back({4, "X=0, xy=(n+1)alpha_t+beta_t", p.alpha_t * (n + 1) + p.beta_t, 3});
    pts.push_back({5, "x=0, Y=1/y=0", BigRat(0), 0});
    pts.push_back({6, "xy=n*alpha_t+beta_t, Y=0", p.alpha_t * n + p.beta_t, 5});
    pts.push_back({7, "x=gamma_t, Y=1/y=0", p.gamma_t, 0});
    pts.push_back({8, "y(x-gamma_t)=-alpha_t, Y=0", -p.alpha_t, 7});
    return pts;
}

} // namespace dpi
