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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inkscore/stress.hpp"

namespace inkscore {

enum class ClusterLabel { low_cluster, high_cluster };

/// Aggregated view of one student's script, pages in ascending page order.
struct StudentSeries {
    std::string student_id;
    std::vector<int> page_indices;            // ascending, aligned with records
    std::vector<PageStressRecord> records;    // sorted by page index
    double mean_stress = 0.0;
    SentimentScores mean_sentiment;           // component-wise mean, renormalized
    std::vector<std::pair<int, double>> anomalies;  // (page_index, score)
    std::vector<ClusterLabel> clusters;       // empty when fewer than 2 pages
    std::optional<double> neg_stress_r;       // omitted on degenerate variance
};

struct AccuracyReport {
    double char_accuracy = 0.0;
    double word_accuracy = 0.0;
    double images_per_second = 0.0;
};

/// Sorts records by the page index embedded in their labels and fills every
/// aggregate. Throws std::invalid_argument on empty input, unparsable labels,
/// mixed students, or duplicate page indices.
StudentSeries aggregate_student(const std::vector<PageStressRecord>& records,
                                double anomaly_cutoff = 3.5);

/// Sample Pearson correlation; nullopt when n < 2 or either variance is 0.
std::optional<double> pearson_r(const std::vector<double>& x, const std::vector<double>& y);

/// Modified z-scores: z_i = 0.6745 (x_i - median) / MAD, flagged when
/// |z| > cutoff. Falls back to standard z-scores (sample stddev) when
/// MAD == 0. Returns nothing for n < 4 or zero spread.
std::vector<std::pair<size_t, double>> detect_anomalies(const std::vector<double>& values,
                                                        double cutoff = 3.5);

/// 1-D 2-means seeded at min/max; Lloyd iterations until stable, ties to the
/// lower centroid. All points land in low_cluster when min == max. Empty
/// result for fewer than 2 values.
std::vector<ClusterLabel> cluster_two_means(const std::vector<double>& values);

/// max(0, 1 - edit_distance(reference, hypothesis) / |reference|) over Unicode
/// scalars; 1.0 when both sides are empty, 0.0 when only the reference is.
double char_accuracy(const std::string& reference, const std::string& hypothesis);

/// Same shape over whitespace-split tokens.
double word_accuracy(const std::string& reference, const std::string& hypothesis);

/// pages / wall_seconds; wall_seconds must be positive.
double throughput(int64_t pages_processed, double wall_seconds);

}  // namespace inkscore
