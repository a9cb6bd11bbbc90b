// Sparse exact elimination over Q on GMP rationals.
// Pivot of a row = its smallest column; rows are stored normalized (pivot 1).
#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace blowup {

struct Entry {
    long col;
    mpq_class val;
};

typedef std::vector<Entry> Row;
typedef std::map<long, mpq_class> Vec;

inline void vec_set_si(Vec& v, long col, long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    if (q != 0) v[col] = q;
}

inline void vec_set_str(Vec& v, long col, const std::string& s) {
    mpq_class q(s, 10);
    q.canonicalize();
    if (q != 0) v[col] = q;
}

inline bool q_fits(const mpq_class& q) {
    return q.get_num().fits_slong_p() && q.get_den().fits_slong_p();
}
inline long q_num(const mpq_class& q) { return q.get_num().get_si(); }
inline long q_den(const mpq_class& q) { return q.get_den().get_si(); }
inline std::string q_num_str(const mpq_class& q) { return q.get_num().get_str(10); }
inline std::string q_den_str(const mpq_class& q) { return q.get_den().get_str(10); }

inline Row to_row(const Vec& v, const mpq_class& scale) {
    Row r;
    r.reserve(v.size());
    for (const auto& kv : v) r.push_back(Entry{kv.first, kv.second * scale});
    return r;
}

// v -= coef * row
inline void axpy(Vec& v, const mpq_class& coef, const Row& row) {
    mpq_class tmp;
    for (const Entry& e : row) {
        auto it = v.find(e.col);
        tmp = coef * e.val;
        if (it == v.end()) {
            v.emplace(e.col, -tmp);
        } else {
            it->second -= tmp;
            if (it->second == 0) v.erase(it);
        }
    }
}

class ReducerCore {
   public:
    std::map<long, Row> rows;

    size_t rank() const { return rows.size(); }

    std::vector<long> pivots() const {
        std::vector<long> out;
        for (const auto& kv : rows) out.push_back(kv.first);
        return out;
    }

    void reduce(Vec& v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto pr = rows.find(it->first);
            if (pr == rows.end()) {
                ++it;
                continue;
            }
            long c = it->first;
            mpq_class coef = it->second;
            axpy(v, coef, pr->second);
            it = v.upper_bound(c);
        }
    }

    bool add(Vec& v) {
        reduce(v);
        if (v.empty()) return false;
        long p = v.begin()->first;
        mpq_class inv = 1 / v.begin()->second;
        rows.emplace(p, to_row(v, inv));
        return true;
    }

    // Fully reduced rows in pivot order.
    std::vector<Vec> echelon() const {
        std::map<long, Vec> done;
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
            Vec row;
            for (const Entry& e : it->second) row.emplace(e.col, e.val);
            auto jt = row.upper_bound(it->first);
            while (jt != row.end()) {
                auto dn = done.find(jt->first);
                if (dn == done.end()) {
                    ++jt;
                    continue;
                }
                long c = jt->first;
                mpq_class coef = jt->second;
                for (const auto& kv : dn->second) {
                    auto slot = row.find(kv.first);
                    mpq_class t = coef * kv.second;
                    if (slot == row.end()) {
                        row.emplace(kv.first, -t);
                    } else {
                        slot->second -= t;
                        if (slot->second == 0) row.erase(slot);
                    }
                }
                jt = row.upper_bound(c);
            }
            done.emplace(it->first, row);
        }
        std::vector<Vec> out;
        for (auto& kv : done) out.push_back(kv.second);
        return out;
    }
};

class TrackedCore {
   public:
    std::map<long, std::pair<Row, Row> > rows;
    long count = 0;

    void reduce(Vec& v, Vec& t) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto pr = rows.find(it->first);
            if (pr == rows.end()) {
                ++it;
                continue;
            }
            long c = it->first;
            mpq_class coef = it->second;
            axpy(v, coef, pr->second.first);
            axpy(t, coef, pr->second.second);
            it = v.upper_bound(c);
        }
    }

    // Returns true when the image is dependent; t then holds the relation.
    bool push(Vec& v, Vec& t) {
        long idx = count++;
        t.clear();
        t[idx] = 1;
        reduce(v, t);
        if (!v.empty()) {
            long p = v.begin()->first;
            mpq_class inv = 1 / v.begin()->second;
            rows.emplace(p, std::make_pair(to_row(v, inv), to_row(t, inv)));
            return false;
        }
        return true;
    }

    bool express(Vec& v, Vec& t) const {
        t.clear();
        reduce(v, t);
        if (!v.empty()) return false;
        // reduction subtracted the rows, so t holds minus the combination
        for (auto& kv : t) kv.second = -kv.second;
        return true;
    }
};

}  // namespace blowup
