#include "kepler/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kepler/errors.hpp"

namespace kepler {

namespace {
void normalize(std::vector<int>& parts) {
    for (size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] > parts[i - 1])
            throw domain_error("Partition: parts must be weakly decreasing");
    }
    for (int x : parts) {
        if (x < 0) throw domain_error("Partition: negative part");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}
} // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
    normalize(parts_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    normalize(parts_);
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contained_in(const Partition& other) const {
    if (length() > other.length()) return false;
    for (int j = 1; j <= length(); ++j) {
        if (part(j) > other.part(j)) return false;
    }
    return true;
}

bool Partition::dominated_by(const Partition& other) const {
    int acc_this = 0, acc_other = 0;
    int n = std::max(length(), other.length());
    for (int j = 1; j <= n; ++j) {
        acc_this += part(j);
        acc_other += other.part(j);
        if (acc_this > acc_other) return false;
    }
    return weight() == other.weight();
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(parts_[0], 0);
    for (int j = 0; j < parts_[0]; ++j) {
        int count = 0;
        for (int x : parts_) {
            if (x > j) ++count;
        }
        conj[j] = count;
    }
    return Partition(std::move(conj));
}

bool Partition::operator<(const Partition& o) const {
    int w = weight(), wo = o.weight();
    if (w != wo) return w < wo;
    // lex descending within a weight: (k) comes before (k-1,1)
    return parts_ > o.parts_;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    if (parts_.empty()) os << '0';
    os << ')';
    return os.str();
}

namespace {
void emit_partitions(int remaining, int max_part, int max_len,
                     std::vector<int>& stack, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        emit_partitions(remaining - p, p, max_len - 1, stack, out);
        stack.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_of_weight(int k, int max_len) {
    if (k < 0) throw domain_error("partitions_of_weight: negative weight");
    std::vector<Partition> out;
    std::vector<int> stack;
    emit_partitions(k, k, max_len, stack, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_weight, int max_len) {
    std::vector<Partition> out;
    for (int k = 0; k <= max_weight; ++k) {
        auto shell = partitions_of_weight(k, max_len);
        out.insert(out.end(), shell.begin(), shell.end());
    }
    return out;
}

long long monomial_orbit_size(const Partition& p, int n) {
    if (p.length() > n) return 0;
    // n! / (prod multiplicities! * (# zeros)!)
    long long num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    long long den = 1;
    int zeros = n - p.length();
    for (int i = 2; i <= zeros; ++i) den *= i;
    int run = 1;
    for (int j = 2; j <= p.length() + 1; ++j) {
        if (j <= p.length() && p.part(j) == p.part(j - 1)) {
            ++run;
        } else {
            for (int i = 2; i <= run; ++i) den *= i;
            run = 1;
        }
    }
    return num / den;
}

} // namespace kepler
