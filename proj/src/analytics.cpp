/*
Copyright 2026 The inkscore Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "inkscore/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "inkscore/ensemble.hpp"
#include "inkscore/ingest.hpp"
#include "inkscore/util.hpp"

namespace inkscore {
namespace {

double median_of(std::vector<double> v) {
    const size_t n = v.size();
    const size_t mid = n / 2;
    std::nth_element(v.begin(), v.begin() + ptrdiff_t(mid), v.end());
    double med = v[mid];
    if (n % 2 == 0) {
        const double lower = *std::max_element(v.begin(), v.begin() + ptrdiff_t(mid));
        med = 0.5 * (med + lower);
    }
    return med;
}

double sample_stddev(const std::vector<double>& v, double mean) {
    if (v.size() < 2) return 0.0;
    double acc = 0.0;
    for (double x : v) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / double(v.size() - 1));
}

}  // namespace

std::optional<double> pearson_r(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("pearson_r: length mismatch");
    const size_t n = x.size();
    if (n < 2) return std::nullopt;
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / double(n);
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / double(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    return sxy / std::sqrt(sxx * syy);
}

std::vector<std::pair<size_t, double>> detect_anomalies(const std::vector<double>& values,
                                                        double cutoff) {
    std::vector<std::pair<size_t, double>> out;
    const size_t n = values.size();
    if (n < 4) return out;

    const double med = median_of(values);
    std::vector<double> absdev(n);
    for (size_t i = 0; i < n; ++i) absdev[i] = std::abs(values[i] - med);
    const double mad = median_of(absdev);

    if (mad > 0.0) {
        for (size_t i = 0; i < n; ++i) {
            const double z = 0.6745 * (values[i] - med) / mad;
            if (std::abs(z) > cutoff) out.emplace_back(i, z);
        }
        return out;
    }
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / double(n);
    const double sd = sample_stddev(values, mean);
    if (sd == 0.0) return out;
    for (size_t i = 0; i < n; ++i) {
        const double z = (values[i] - mean) / sd;
        if (std::abs(z) > cutoff) out.emplace_back(i, z);
    }
    return out;
}

std::vector<ClusterLabel> cluster_two_means(const std::vector<double>& values) {
    const size_t n = values.size();
    if (n < 2) return {};
    const auto [mn_it, mx_it] = std::minmax_element(values.begin(), values.end());
    if (*mn_it == *mx_it) return std::vector<ClusterLabel>(n, ClusterLabel::low_cluster);

    double lo = *mn_it, hi = *mx_it;
    std::vector<ClusterLabel> assign(n, ClusterLabel::low_cluster);
    for (;;) {
        bool changed = false;
        for (size_t i = 0; i < n; ++i) {
            const double dl = std::abs(values[i] - lo), dh = std::abs(values[i] - hi);
            const ClusterLabel lab =
                dl <= dh ? ClusterLabel::low_cluster : ClusterLabel::high_cluster;
            if (lab != assign[i]) {
                assign[i] = lab;
                changed = true;
            }
        }
        if (!changed) break;
        double slo = 0, shi = 0;
        size_t nlo = 0, nhi = 0;
        for (size_t i = 0; i < n; ++i) {
            if (assign[i] == ClusterLabel::low_cluster) {
                slo += values[i];
                ++nlo;
            } else {
                shi += values[i];
                ++nhi;
            }
        }
        if (nlo) lo = slo / double(nlo);
        if (nhi) hi = shi / double(nhi);
        if (lo > hi) std::swap(lo, hi);  // keep the "low" centroid the smaller one
    }
    return assign;
}

double char_accuracy(const std::string& reference, const std::string& hypothesis) {
    const size_t ref_len = utf8_to_scalars(reference).size();
    if (ref_len == 0) return hypothesis.empty() ? 1.0 : 0.0;
    const double acc = 1.0 - double(edit_distance(reference, hypothesis)) / double(ref_len);
    return acc < 0.0 ? 0.0 : acc;
}

double word_accuracy(const std::string& reference, const std::string& hypothesis) {
    const std::vector<std::string> ref = split_whitespace(reference);
    const std::vector<std::string> hyp = split_whitespace(hypothesis);
    if (ref.empty()) return hyp.empty() ? 1.0 : 0.0;
    const double acc = 1.0 - double(edit_distance_tokens(ref, hyp)) / double(ref.size());
    return acc < 0.0 ? 0.0 : acc;
}

double throughput(int64_t pages_processed, double wall_seconds) {
    if (wall_seconds <= 0.0) throw std::invalid_argument("throughput: wall_seconds <= 0");
    return double(pages_processed) / wall_seconds;
}

StudentSeries aggregate_student(const std::vector<PageStressRecord>& records,
                                double anomaly_cutoff) {
    if (records.empty()) throw std::invalid_argument("aggregate_student: no records");

    struct Keyed {
        int page = 0;
        const PageStressRecord* rec = nullptr;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(records.size());
    std::string student;
    for (const PageStressRecord& rec : records) {
        const auto parsed = parse_page_label(rec.student);
        if (!parsed)
            throw std::invalid_argument("aggregate_student: unparsable label '" + rec.student +
                                        "'");
        if (student.empty())
            student = parsed->first;
        else if (student != parsed->first)
            throw std::invalid_argument("aggregate_student: mixed students '" + student +
                                        "' and '" + parsed->first + "'");
        keyed.push_back(Keyed{parsed->second, &rec});
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const Keyed& a, const Keyed& b) { return a.page < b.page; });
    for (size_t i = 1; i < keyed.size(); ++i)
        if (keyed[i].page == keyed[i - 1].page)
            throw std::invalid_argument("aggregate_student: duplicate page index " +
                                        std::to_string(keyed[i].page) + " for pages '" +
                                        keyed[i - 1].rec->student + "' and '" +
                                        keyed[i].rec->student + "'");

    StudentSeries series;
    series.student_id = student;
    std::vector<double> stress, neg;
    for (const Keyed& k : keyed) {
        series.page_indices.push_back(k.page);
        series.records.push_back(*k.rec);
        stress.push_back(k.rec->stress_index);
        neg.push_back(k.rec->sentiment.negative);
        series.mean_sentiment.negative += k.rec->sentiment.negative;
        series.mean_sentiment.neutral += k.rec->sentiment.neutral;
        series.mean_sentiment.positive += k.rec->sentiment.positive;
    }
    const double n = double(keyed.size());
    series.mean_stress = std::accumulate(stress.begin(), stress.end(), 0.0) / n;
    series.mean_sentiment.negative /= n;
    series.mean_sentiment.neutral /= n;
    series.mean_sentiment.positive /= n;
    series.mean_sentiment = renormalize(series.mean_sentiment, "aggregate");

    for (const auto& [idx, score] : detect_anomalies(stress, anomaly_cutoff))
        series.anomalies.emplace_back(series.page_indices[idx], score);
    series.clusters = cluster_two_means(stress);
    series.neg_stress_r = pearson_r(neg, stress);
    return series;
}

}  // namespace inkscore
