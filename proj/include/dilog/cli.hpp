#ifndef DILOG_CLI_HPP
#define DILOG_CLI_HPP

#include <string>
#include <vector>

#include "dilog/polylog.hpp"
#include "dilog/verify.hpp"
#include "dilog/zero_finder.hpp"

namespace dilog::cli {

// One machine-readable output line.  Payload floats are rendered with 17
// significant digits so the JSON round-trips binary64 losslessly and
// re-runs are byte-identical.
struct OutputRecord {
    std::string kind;  // zero | curve | count | polylog | eulerian
    std::string payload_json;

    std::string to_json_line() const;
};

std::string format_double(double v);  // %.17g

OutputRecord record_for_certificate(const ZeroCertificate& cert);

// Front ends.  These add no arithmetic of their own; every value printed
// or written comes from a single library call.
OutputRecord cmd_zero(int A, int B, double tol);
void cmd_table(int bmax, double tol, const std::string& out_path);
OutputRecord cmd_verify(int amax, int bmax, std::vector<BranchIndex>* mismatches);
void cmd_curves(int A, int B, int n, const std::string& out_path);
void cmd_polylog(double s_re, double s_im, int jmax, const std::string& out_path);
OutputRecord cmd_eulerian(int m);

// DILOG_ZEROS_THREADS caps worker fan-out; 0 or unset picks the hardware
// concurrency.  Results are committed by index, so output order never
// depends on scheduling.
int thread_cap();
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace dilog::cli

#endif
