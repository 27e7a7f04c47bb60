#include "dilog/cli.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace dilog::cli {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string OutputRecord::to_json_line() const {
    std::string line = "{\"kind\":\"";
    line += kind;
    line += "\",\"schema_version\":\"1\",\"payload\":";
    line += payload_json;
    line += "}";
    return line;
}

namespace {

// minimal ordered JSON object writer; doubles go through format_double
class JsonObject {
public:
    JsonObject& field(const std::string& k, double v) {
        return raw(k, format_double(v));
    }
    JsonObject& field(const std::string& k, int v) {
        return raw(k, std::to_string(v));
    }
    JsonObject& field(const std::string& k, bool v) {
        return raw(k, v ? "true" : "false");
    }
    JsonObject& field(const std::string& k, const std::string& v) {
        return raw(k, "\"" + v + "\"");
    }
    JsonObject& raw(const std::string& k, const std::string& v) {
        if (!first_) body_ += ",";
        first_ = false;
        body_ += "\"" + k + "\":" + v;
        return *this;
    }
    std::string str() const { return "{" + body_ + "}"; }

private:
    std::string body_;
    bool first_ = true;
};

std::string json_array_of_doubles(const std::vector<double>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += format_double(v[i]);
    }
    return s + "]";
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write: " + path);
    return f;
}

}  // namespace

OutputRecord record_for_certificate(const ZeroCertificate& cert) {
    JsonObject payload;
    payload.field("A", cert.branch.A)
        .field("B", cert.branch.B)
        .field("zero_re", cert.zero.real())
        .field("zero_im", cert.zero.imag())
        .field("error_radius", cert.error_radius)
        .field("iterations", int(cert.iterations.size()))
        .field("contraction_constant", cert.contraction_constant)
        .field("tol_clamped", cert.tol_clamped)
        .field("in_region", cert.in_region);
    return {"zero", payload.str()};
}

OutputRecord cmd_zero(int A, int B, double tol) {
    ZeroCertificate cert = find_zero({A, B}, tol);
    return record_for_certificate(cert);
}

void cmd_table(int bmax, double tol, const std::string& out_path) {
    if (bmax < 0) throw std::invalid_argument("table: bmax >= 0");
    std::vector<BranchIndex> branches;
    for (int B = -bmax; B <= bmax; ++B) {
        if (B == 0) {
            for (int A = 0; A <= bmax; ++A) branches.push_back({A, 0});
        } else {
            for (int A = -bmax; A <= bmax; ++A)
                if (has_zero({A, B})) branches.push_back({A, B});
        }
    }
    std::vector<std::string> lines(branches.size());
    parallel_for(int(branches.size()), [&](int i) {
        lines[i] =
            record_for_certificate(find_zero(branches[i], tol)).to_json_line();
    });
    auto f = open_out(out_path);
    for (const auto& l : lines) f << l << "\n";
}

OutputRecord cmd_verify(int amax, int bmax, std::vector<BranchIndex>* mismatches) {
    if (amax < 0 || bmax < 0) throw std::invalid_argument("verify: bounds >= 0");
    std::vector<BranchIndex> branches;
    for (int B = 0; B <= bmax; ++B)
        for (int A = -amax; A <= amax; ++A) branches.push_back({A, B});

    std::vector<int> counted(branches.size());
    parallel_for(int(branches.size()), [&](int i) {
        BranchIndex b = branches[i];
        WindingReport w =
            winding_count(b, default_contour_radius(b), 1e-4, 1e-4);
        counted[i] = w.count;
    });

    std::string mlist = "[";
    int bad = 0;
    for (size_t i = 0; i < branches.size(); ++i) {
        if (counted[i] != expected_zero_count(branches[i])) {
            if (bad++) mlist += ",";
            mlist += "[" + std::to_string(branches[i].A) + "," +
                     std::to_string(branches[i].B) + "]";
            if (mismatches) mismatches->push_back(branches[i]);
        }
    }
    mlist += "]";

    JsonObject payload;
    payload.field("amax", amax)
        .field("bmax", bmax)
        .field("branches", int(branches.size()))
        .field("mismatch_count", bad)
        .raw("mismatches", mlist);
    return {"count", payload.str()};
}

void cmd_curves(int A, int B, int n, const std::string& out_path) {
    if (n < 2) throw std::invalid_argument("curves: n >= 2");
    PolarRectangle rect = polar_rectangle({A, B});
    auto f = open_out(out_path);
    f << "curve,param,value,residual\n";
    // keep g's parameter inside its open domain (theta2 may touch pi)
    double th_lo = rect.theta1;
    double th_hi = std::min(rect.theta2, kPi * (1.0 - 1e-12));
    for (int i = 0; i < n; ++i) {
        double th = th_lo + (th_hi - th_lo) * i / (n - 1);
        CurveSample sm = curve_g(B, th);
        f << "g," << format_double(sm.param) << "," << format_double(sm.value)
          << "," << format_double(sm.residual) << "\n";
    }
    for (int i = 0; i < n; ++i) {
        double r = rect.r1 + (rect.r2 - rect.r1) * i / (n - 1);
        CurveSample sm = curve_h({A, B}, r);
        f << "h," << format_double(sm.param) << "," << format_double(sm.value)
          << "," << format_double(sm.residual) << "\n";
    }
}

void cmd_polylog(double s_re, double s_im, int jmax,
                 const std::string& out_path) {
    if (s_re >= 0.0 && s_re <= 1.0)
        throw unsupported_branch("polylog: unsupported strip 0 <= Re(s) <= 1");
    PolylogZeroSet set = find_polylog_zeros({s_re, s_im}, jmax);
    auto f = open_out(out_path);
    f << "j,seed_re,seed_im,zero_re,zero_im,dist\n";
    for (size_t i = 0; i < set.zeros.size(); ++i) {
        int j = set.approx_indices[i];
        cplx seed = spiral_zero_approx({s_re, s_im}, j);
        cplx z = set.zeros[i];
        f << j << "," << format_double(seed.real()) << ","
          << format_double(seed.imag()) << "," << format_double(z.real()) << ","
          << format_double(z.imag()) << "," << format_double(std::abs(z - seed))
          << "\n";
    }
}

OutputRecord cmd_eulerian(int m) {
    EulerianPolynomial p = eulerian(m);
    std::string coeffs = "[";
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        if (i) coeffs += ",";
        coeffs += "\"" + p.coeffs[i].get_str() + "\"";
    }
    coeffs += "]";

    std::vector<double> zeros;
    std::vector<double> approx;
    if (m >= 1 && m <= 60) {
        zeros = eulerian_zeros(m);
        for (int j = m - 1; j >= 1; --j) approx.push_back(sobolev_approx(m, j));
    }
    JsonObject payload;
    payload.field("m", m)
        .raw("coefficients", coeffs)
        .raw("zeros", json_array_of_doubles(zeros))
        .raw("sobolev_approx", json_array_of_doubles(approx));
    return {"eulerian", payload.str()};
}

int thread_cap() {
    const char* env = std::getenv("DILOG_ZEROS_THREADS");
    if (!env) return int(std::thread::hardware_concurrency());
    int v = std::atoi(env);
    if (v <= 0) return int(std::thread::hardware_concurrency());
    return v;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    int workers = std::min(n, std::max(1, thread_cap()));
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr eptr = nullptr;
    std::mutex mtx;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                if (failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> g(mtx);
                    if (!eptr) eptr = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (eptr) std::rethrow_exception(eptr);
}

}  // namespace dilog::cli
