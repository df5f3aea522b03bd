#include "tame/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "tame/errors.hpp"

namespace tame {

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot write " + tmp.string());
        f << content;
        f.flush();
        if (!f) throw Error("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot move report into " + path + ": " + ec.message());
    }
}

VerificationReport merge_reports(const std::string& name, const std::vector<VerificationReport>& parts) {
    VerificationReport out;
    out.name = name;
    ordered_json runs = ordered_json::array();
    for (const auto& p : parts) {
        runs.push_back(p.parameters);
        for (const auto& [k, v] : p.counts.items()) {
            if (!v.is_number_integer()) continue;
            const long long prev = out.counts.value(k, 0LL);
            out.counts[k] = k == "rigidObjects" ? std::max(prev, v.get<long long>()) : prev + v.get<long long>();
        }
        out.violations.insert(out.violations.end(), p.violations.begin(), p.violations.end());
        out.uncovered.insert(out.uncovered.end(), p.uncovered.begin(), p.uncovered.end());
        out.window_used = std::max(out.window_used, p.window_used);
    }
    out.parameters["runs"] = runs;
    return out;
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

std::string inventory_csv(const ClusterCategory& cat, const ClusterTiltingObject& t, int window) {
    std::set<IndRigidObject> shifted;
    for (const auto& s : t.summands) shifted.insert(cat.shift(s));
    std::ostringstream os;
    os << "object,dimVector,denVector\n";
    for (const auto& m : cat.enumerate_rigid(window)) {
        os << m.label() << ',';
        if (m.is_module()) os << join(cat.dim_vector(m));
        os << ',';
        if (!shifted.count(m)) os << join(denominator_from_category(cat, t, m));
        os << '\n';
    }
    return os.str();
}

}  // namespace tame
