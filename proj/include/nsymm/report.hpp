#ifndef NSYMM_REPORT_HPP
#define NSYMM_REPORT_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nsymm {

/// One checked law at one degree.
struct CheckRecord {
    int degree = 0;
    std::string law;
    bool pass = true;
    std::optional<std::string> witness;
};

/// Ordered collection of check records plus per-degree timing.
/// Failures are content, never exceptions.
struct VerificationReport {
    std::string suite;
    std::vector<CheckRecord> records;
    std::vector<std::pair<int, double>> degree_millis;  // (degree, elapsed ms)
    std::size_t pairs_checked = 0;                      // only used by exhaustive pair suites

    [[nodiscard]] bool passed() const
    {
        for (const auto& r : records) {
            if (!r.pass) return false;
        }
        return true;
    }

    void add(int degree, std::string law, bool pass, std::optional<std::string> witness = std::nullopt)
    {
        records.push_back({degree, std::move(law), pass, pass ? std::nullopt : std::move(witness)});
    }

    void append(const VerificationReport& other)
    {
        records.insert(records.end(), other.records.begin(), other.records.end());
        degree_millis.insert(degree_millis.end(), other.degree_millis.begin(), other.degree_millis.end());
        pairs_checked += other.pairs_checked;
    }
};

class Stopwatch {
public:
    [[nodiscard]] double millis() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace nsymm

#endif  // NSYMM_REPORT_HPP
