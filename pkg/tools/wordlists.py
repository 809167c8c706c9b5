# Curated word lists feeding tools/make_data.py.  Keep everything NFC.

# --- Vietnamese stopwords (exactly 100, used by the language detector) ---
VI_STOPWORDS = [
    "và", "của", "là", "có", "được", "trong", "với", "này", "cho", "một",
    "các", "những", "để", "theo", "như", "từ", "đã", "cũng", "khi", "về",
    "sẽ", "nếu", "còn", "đến", "hay", "hoặc", "bị", "vì", "do", "lại",
    "ra", "vào", "sau", "trước", "tại", "đây", "kia", "đó", "nào", "gì",
    "ai", "sao", "thì", "mà", "nhưng", "tuy", "dù", "mỗi", "mọi", "tất",
    "đều", "rất", "lắm", "quá", "hơn", "nhất", "nữa", "thêm", "bao", "nhiêu",
    "trên", "dưới", "giữa", "ngoài", "bên", "cùng", "nhau", "mình", "tôi", "bạn",
    "anh", "chị", "em", "ông", "bà", "họ", "nó", "ta", "chúng", "việc",
    "người", "cái", "con", "chiếc", "sự", "cách", "lúc", "nơi", "năm", "ngày",
    "tháng", "giờ", "phải", "nên", "cần", "muốn", "đang", "vẫn", "vừa", "mới",
]

# --- English stopwords (exactly 100) ---
EN_STOPWORDS = [
    "the", "a", "an", "and", "or", "but", "if", "then", "else", "when",
    "while", "of", "at", "by", "for", "with", "about", "against", "between", "into",
    "through", "during", "before", "after", "above", "below", "to", "from", "up", "down",
    "in", "out", "on", "off", "over", "under", "again", "further", "once", "here",
    "there", "all", "any", "both", "each", "few", "more", "most", "other", "some",
    "such", "no", "nor", "not", "only", "own", "same", "so", "than", "too",
    "very", "can", "will", "just", "should", "now", "is", "are", "was", "were",
    "be", "been", "being", "have", "has", "had", "having", "do", "does", "did",
    "doing", "it", "its", "this", "that", "these", "those", "i", "you", "he",
    "she", "we", "they", "them", "his", "her", "their", "what", "which", "who",
]

# --- Vietnamese multi-syllable dictionary words -------------------------------
# People and roles
VI_WORDS_PEOPLE = [
    "học sinh", "sinh viên", "giáo viên", "thầy giáo", "cô giáo", "phụ huynh",
    "hiệu trưởng", "nhân viên", "cán bộ", "bác sĩ", "kỹ sư", "công nhân",
    "nông dân", "doanh nhân", "khách hàng", "bạn bè", "gia đình", "trẻ em",
    "thanh niên", "người lớn", "cộng đồng", "xã hội", "con người", "đồng nghiệp",
    "chúng tôi", "chúng ta", "mọi người", "tác giả", "độc giả", "chuyên gia",
    "nhà khoa học", "nhà nghiên cứu", "người dùng", "người dân",
]
# Education and knowledge
VI_WORDS_EDU = [
    "học tập", "giáo dục", "đào tạo", "nghiên cứu", "kiến thức", "tri thức",
    "kỹ năng", "kinh nghiệm", "bài tập", "bài học", "bài giảng", "bài kiểm tra",
    "môn học", "chương trình", "giáo trình", "tài liệu", "sách giáo khoa",
    "trường học", "nhà trường", "lớp học", "đại học", "trung học", "tiểu học",
    "thư viện", "phòng học", "học kỳ", "học phí", "điểm số", "kết quả",
    "thành tích", "tốt nghiệp", "văn bằng", "chứng chỉ", "ngoại ngữ",
    "tiếng Việt", "tiếng Anh", "từ vựng", "ngữ pháp", "phát âm", "luyện tập",
    "thực hành", "lý thuyết", "phương pháp", "câu hỏi", "trả lời", "thi cử",
    "ôn tập", "giảng dạy", "học hỏi", "tư duy", "sáng tạo", "khám phá",
]
# Technology
VI_WORDS_TECH = [
    "công nghệ", "thông tin", "công nghệ thông tin", "máy tính", "máy móc",
    "phần mềm", "phần cứng", "thiết bị", "hệ thống", "mạng lưới", "dữ liệu",
    "điện thoại", "trang web", "ứng dụng", "chương trình máy tính",
    "kỹ thuật", "khoa học", "khoa học máy tính", "trí tuệ nhân tạo",
    "tự động", "kỹ thuật số", "điện tử", "thí nghiệm", "phát minh", "sáng chế",
]
# Society, economy, environment
VI_WORDS_SOCIETY = [
    "kinh tế", "văn hóa", "lịch sử", "chính trị", "pháp luật", "quyền lợi",
    "trách nhiệm", "nghĩa vụ", "lao động", "việc làm", "thu nhập", "cuộc sống",
    "chất lượng", "số lượng", "nguyên nhân", "giải pháp", "vấn đề", "tình hình",
    "hoạt động", "tổ chức", "công ty", "doanh nghiệp", "thị trường", "sản phẩm",
    "dịch vụ", "giao thông", "xây dựng", "phát triển", "tăng trưởng", "đầu tư",
    "môi trường", "ô nhiễm", "khí hậu", "thiên nhiên", "tài nguyên", "năng lượng",
    "rác thải", "tái chế", "bảo vệ", "bảo tồn", "thành phố", "nông thôn",
    "đất nước", "quốc gia", "quê hương", "thế giới", "khu vực", "địa phương",
    "y tế", "sức khỏe", "bệnh viện", "an toàn", "thực phẩm", "nông nghiệp",
    "du lịch", "thể thao", "nghệ thuật", "âm nhạc", "điện ảnh", "báo chí",
]
# Verbs and verb phrases
VI_WORDS_VERBS = [
    "tìm hiểu", "trao đổi", "thảo luận", "chia sẻ", "tham gia", "hoàn thành",
    "sử dụng", "đánh giá", "nhận xét", "góp ý", "phản hồi", "đề xuất",
    "quyết định", "lựa chọn", "thay đổi", "cải thiện", "nâng cao", "mở rộng",
    "áp dụng", "triển khai", "thực hiện", "chuẩn bị", "bắt đầu", "kết thúc",
    "tiếp tục", "duy trì", "hỗ trợ", "giúp đỡ", "hướng dẫn", "giải thích",
    "trình bày", "giới thiệu", "phân tích", "tổng hợp", "so sánh", "kiểm tra",
    "theo dõi", "quan sát", "lắng nghe", "suy nghĩ", "ghi nhớ", "ghi chép",
    "đồng ý", "phản đối", "tin tưởng", "hy vọng", "mong muốn", "cố gắng",
    "nỗ lực", "phấn đấu", "vượt qua", "đạt được", "theo đuổi", "xây dựng nên",
]
# Qualities (also feed the sentiment lexicon)
VI_WORDS_QUALITY = [
    "tuyệt vời", "xuất sắc", "tốt đẹp", "hài lòng", "thân thiện", "nhiệt tình",
    "chu đáo", "tận tâm", "chuyên nghiệp", "hiệu quả", "thuận tiện", "thoải mái",
    "vui vẻ", "hạnh phúc", "tự hào", "yên tâm", "an toàn", "bổ ích",
    "hấp dẫn", "thú vị", "phong phú", "đa dạng", "rõ ràng", "dễ hiểu",
    "dễ dàng", "nhanh chóng", "kịp thời", "chính xác", "đầy đủ", "hợp lý",
    "tích cực", "chủ động", "chăm chỉ", "cẩn thận", "kiên trì", "sáng sủa",
    "tệ hại", "thất vọng", "khó chịu", "chậm chạp", "phức tạp", "bất tiện",
    "lo lắng", "buồn bã", "tức giận", "kém cỏi", "nghèo nàn", "lạc hậu",
    "khó khăn", "vất vả", "mệt mỏi", "căng thẳng", "nhàm chán", "đơn điệu",
    "thiếu sót", "sai lầm", "yếu kém", "tồi tệ", "tiêu cực", "nguy hiểm",
    "bất mãn", "bức xúc", "phiền phức", "rắc rối", "lộn xộn", "ồn ào",
]
# Time and place phrases
VI_WORDS_MISC = [
    "hôm nay", "hôm qua", "ngày mai", "tuần này", "tháng trước", "năm nay",
    "hiện nay", "hiện tại", "tương lai", "quá khứ", "thường xuyên", "đôi khi",
    "luôn luôn", "ngay lập tức", "dần dần", "đặc biệt", "quan trọng", "cần thiết",
    "chủ yếu", "cơ bản", "toàn bộ", "tổng thể", "cụ thể", "chi tiết",
    "ví dụ", "chẳng hạn", "tuy nhiên", "bởi vì", "do đó", "vì vậy",
    "ngoài ra", "bên cạnh", "trước tiên", "cuối cùng", "nói chung", "nói riêng",
]

VI_DICTIONARY = (
    VI_WORDS_PEOPLE + VI_WORDS_EDU + VI_WORDS_TECH + VI_WORDS_SOCIETY
    + VI_WORDS_VERBS + VI_WORDS_QUALITY + VI_WORDS_MISC
)

# --- Vietnamese single syllables (refcorpus filler; all common) ---
VI_SYLLABLES = [
    "nhà", "cửa", "xe", "đường", "phố", "chợ", "quán", "cơm", "nước", "trà",
    "sách", "vở", "bút", "giấy", "bàn", "ghế", "lớp", "trường", "điểm", "bài",
    "câu", "chữ", "lời", "nghĩa", "nghề", "tiền", "đất", "trời", "mây", "mưa",
    "nắng", "gió", "sông", "núi", "biển", "rừng", "cây", "hoa", "lá", "quả",
    "chim", "cá", "gà", "chó", "mèo", "đời", "phút", "giây", "sáng", "trưa",
    "chiều", "tối", "đêm", "xuân", "hè", "thu", "đông", "đi", "đứng", "ngồi",
    "nằm", "chạy", "nhảy", "bay", "bơi", "ăn", "uống", "ngủ", "thức", "học",
    "dạy", "đọc", "viết", "nói", "nghe", "nhìn", "xem", "thấy", "biết", "hiểu",
    "nhớ", "quên", "yêu", "thương", "ghét", "giận", "vui", "buồn", "cười", "khóc",
    "làm", "chơi", "nghỉ", "mua", "bán", "nhận", "gửi", "lấy", "đặt", "mở",
    "đóng", "tìm", "gặp", "hỏi", "giúp", "thích", "tốt", "xấu", "đẹp", "già",
    "trẻ", "lớn", "nhỏ", "cao", "thấp", "dài", "ngắn", "rộng", "hẹp", "nhanh",
    "chậm", "mạnh", "yếu", "nóng", "lạnh", "ấm", "mát", "khô", "ướt", "sạch",
    "bẩn", "cũ", "đúng", "sai", "dễ", "khó", "rẻ", "đắt", "ngon", "ngọt",
    "chua", "cay", "mặn", "nhạt", "đen", "trắng", "đỏ", "xanh", "vàng", "tím",
    "hồng", "nâu", "xám", "hai", "ba", "bốn", "sáu", "bảy", "tám", "chín",
    "mười", "trăm", "nghìn", "triệu", "ít", "đủ", "thiếu", "thừa", "đầu", "cuối",
    "giữa", "trên", "dưới", "trong", "ngoài", "xa", "gần", "đây", "đó", "kia",
]

# --- English base vocabulary (refcorpus + lexicon source) ---
EN_COMMON = [
    "time", "year", "people", "way", "day", "man", "woman", "child", "world", "life",
    "hand", "part", "eye", "place", "work", "week", "case", "point", "government", "company",
    "number", "group", "problem", "fact", "night", "home", "water", "room", "mother", "area",
    "money", "story", "month", "book", "word", "business", "issue", "side", "kind", "head",
    "house", "service", "friend", "father", "power", "hour", "game", "line", "end", "member",
    "law", "car", "city", "name", "team", "minute", "idea", "body", "information", "back",
    "parent", "face", "others", "level", "office", "door", "health", "person", "art", "war",
    "history", "party", "result", "change", "morning", "reason", "research", "girl", "guy", "moment",
    "air", "teacher", "force", "education", "foot", "boy", "age", "policy", "process", "music",
    "market", "sense", "nation", "plan", "college", "interest", "death", "experience", "effect", "use",
    "class", "control", "care", "field", "development", "role", "effort", "rate", "heart", "drug",
    "show", "leader", "light", "voice", "wife", "police", "mind", "price", "report", "decision",
    "son", "view", "relationship", "town", "road", "arm", "difference", "value", "building", "action",
    "model", "season", "society", "tax", "director", "position", "player", "record", "paper", "space",
    "ground", "form", "event", "official", "matter", "center", "couple", "site", "project", "activity",
    "star", "table", "need", "court", "oil", "situation", "cost", "industry", "figure", "street",
    "image", "phone", "data", "picture", "practice", "piece", "land", "product", "doctor", "wall",
    "patient", "worker", "news", "test", "movie", "north", "love", "support", "technology", "step",
    "baby", "computer", "type", "attention", "film", "tree", "source", "subject", "rule", "question",
    "school", "student", "family", "country", "state", "system", "program", "study", "lesson", "language",
    "be", "have", "say", "get", "make", "go", "know", "take", "see", "come",
    "think", "look", "want", "give", "find", "tell", "ask", "seem", "feel", "try",
    "leave", "call", "keep", "let", "begin", "help", "talk", "turn", "start", "show",
    "hear", "play", "run", "move", "like", "live", "believe", "hold", "bring", "happen",
    "write", "provide", "sit", "stand", "lose", "pay", "meet", "include", "continue", "set",
    "learn", "lead", "understand", "watch", "follow", "stop", "create", "speak", "read", "allow",
    "add", "spend", "grow", "open", "walk", "win", "offer", "remember", "consider", "appear",
    "buy", "wait", "serve", "send", "expect", "build", "stay", "fall", "cut", "reach",
    "kill", "remain", "suggest", "raise", "pass", "sell", "require", "report", "decide", "pull",
    "good", "new", "first", "last", "long", "great", "little", "old", "right", "big",
    "high", "different", "small", "large", "next", "early", "young", "important", "public", "bad",
    "same", "able", "human", "local", "late", "hard", "major", "better", "economic", "strong",
    "possible", "whole", "free", "military", "true", "federal", "international", "full", "special", "easy",
    "clear", "recent", "certain", "personal", "open", "red", "difficult", "available", "likely", "short",
    "single", "medical", "current", "wrong", "private", "past", "foreign", "fine", "common", "poor",
    "natural", "significant", "similar", "hot", "dead", "central", "happy", "serious", "ready", "simple",
    "left", "physical", "general", "environmental", "financial", "blue", "democratic", "dark", "various", "entire",
    "close", "legal", "religious", "cold", "final", "main", "green", "nice", "huge", "popular",
    "traditional", "cultural", "social", "academic", "technical", "scientific", "digital", "modern", "global", "national",
    "community", "environment", "pollution", "climate", "nature", "resource", "energy", "waste", "recycling", "conservation",
    "software", "hardware", "network", "device", "application", "website", "database", "algorithm", "machine", "engineering",
    "university", "classroom", "curriculum", "assignment", "exam", "grade", "degree", "knowledge", "skill", "training",
]
