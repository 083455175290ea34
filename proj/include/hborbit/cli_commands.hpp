#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hborbit {

// Exit statuses shared by every subcommand, stable for scripting.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitVerification = 4;
inline constexpr int kExitIo = 5;

struct FindOptions {
    int target_h = 35;
    std::vector<int> schedule;  // empty: 5,10,...,target_h
    double tol = 1e-8;
    int max_iter = 50;
    double sigma = 10.0;
    double r = 28.0;
    double b = 8.0 / 3.0;
    std::string out_path;
    bool extended = false;
};

struct VerifyOptions {
    std::string in_path;
    double term_tol = 0.0;     // 0: default for the file's precision (1e-16 / 1e-25)
    int max_order = 0;         // 0: default for the file's precision (20 / 32)
    double closure_tol = 1e-4; // verification passes when both errors stay below this
};

struct SampleOptions {
    std::string in_path;
    std::string out_path;
    int points = 1000;
};

int cmd_find(const FindOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_sample(const SampleOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace hborbit
